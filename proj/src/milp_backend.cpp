#include "mmrstp/milp_backend.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "mmrstp/benders.hpp"
#include "mmrstp/lp_export.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace mmrstp {

namespace {

std::string substitute(std::string tmpl, const std::string& key,
                       const std::string& value, bool& found) {
    std::size_t pos;
    while ((pos = tmpl.find(key)) != std::string::npos) {
        tmpl.replace(pos, key.size(), value);
        found = true;
    }
    return tmpl;
}

bool iequals(const std::string& a, const char* b) {
    std::size_t i = 0;
    for (; a[i] != '\0' && b[i] != '\0'; ++i)
        if (std::toupper(static_cast<unsigned char>(a[i])) != b[i]) return false;
    return a.size() == i && b[i] == '\0';
}

int decode_exit_status(int raw) {
#ifdef __unix__
    if (WIFEXITED(raw)) return WEXITSTATUS(raw);
#endif
    return raw;
}

}  // namespace

std::filesystem::path make_milp_workdir() {
    static std::mt19937_64 rng{std::random_device{}()};
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::ostringstream name;
        name << "mmrstp-" << std::hex << rng();
        const auto dir = base / name.str();
        std::error_code ec;
        if (std::filesystem::create_directories(dir, ec)) return dir;
    }
    throw MilpError("cannot create a scratch directory under " + base.string());
}

std::map<std::string, double> external_backend_run(
    const std::filesystem::path& lp_path, const std::string& command_template) {
    if (command_template.empty())
        throw MilpError(
            "no MILP command configured; pass --milp-cmd or set "
            "MMRSTP_MILP_CMD to a template like \"solver {lp} {sol}\"");

    std::filesystem::path sol_path = lp_path;
    sol_path.replace_extension(".sol");
    std::filesystem::path log_path = lp_path;
    log_path.replace_extension(".log");

    bool has_lp = false, has_sol = false;
    std::string command =
        substitute(command_template, "{lp}", lp_path.string(), has_lp);
    command = substitute(command, "{sol}", sol_path.string(), has_sol);
    if (!has_lp || !has_sol)
        throw MilpError(
            "MILP command template must contain both {lp} and {sol}: " +
            command_template);

    std::filesystem::remove(sol_path);
    command += " > " + log_path.string() + " 2>&1";
    const int raw = std::system(command.c_str());
    const int status = decode_exit_status(raw);
    if (status != 0)
        throw MilpError("MILP command exited with status " +
                        std::to_string(status) +
                        (status == 127 ? " (executable not found?)" : "") +
                        "; see " + log_path.string());

    std::ifstream sol(sol_path);
    if (!sol)
        throw MilpError("MILP command produced no solution file at " +
                        sol_path.string());

    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(sol, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream parts(line);
        std::string tok;
        while (parts >> tok) tokens.push_back(tok);
    }

    if (tokens.empty())
        throw MilpError("empty solution file: " + sol_path.string());
    if (iequals(tokens.front(), "INFEASIBLE"))
        throw MilpInfeasible("MILP solver reports the model infeasible");
    if (iequals(tokens.front(), "UNBOUNDED"))
        throw MilpError("MILP solver reports the model unbounded");
    if (tokens.size() % 2 != 0)
        throw MilpError("malformed solution file (odd token count): " +
                        sol_path.string());

    std::map<std::string, double> values;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        double v;
        try {
            std::size_t used = 0;
            v = std::stod(tokens[i + 1], &used);
            if (used != tokens[i + 1].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw MilpError("malformed value for variable " + tokens[i] +
                            ": " + tokens[i + 1]);
        }
        const double snapped = std::round(v);
        if (std::abs(v - snapped) <= 1e-6) v = snapped;
        values[tokens[i]] = v;
    }
    return values;
}

MasterSolution master_solve_external(const Instance& inst,
                                     const std::vector<Cut>& cuts,
                                     const std::string& command_template) {
    if (cuts.empty())
        throw std::invalid_argument(
            "master_solve_external: empty cut pool leaves the master "
            "unbounded");

    const auto workdir = make_milp_workdir();
    const auto lp_path = workdir / "master.lp";
    export_master_lp_file(inst, cuts, lp_path);
    const auto values = external_backend_run(lp_path, command_template);

    const DirectedModel dm = bidirect(inst);
    std::vector<char> selected(inst.edge_count(), 0);
    for (std::size_t a = 0; a < dm.arcs.size(); ++a) {
        const std::string name = "x_" + std::to_string(dm.arcs[a].first) +
                                 "_" + std::to_string(dm.arcs[a].second);
        const auto it = values.find(name);
        const double v = it == values.end() ? 0.0 : it->second;
        if (v != 0.0 && v != 1.0)
            throw MilpError("variable " + name + " is not integral: " +
                            std::to_string(v));
        if (v == 1.0) selected[dm.arc_to_edge[a]] = 1;
    }

    // The x support is connected from the root to every terminal but may
    // carry stray components or cycles that cost nothing; keep the root's
    // component and drop cycle-closing edges. Neither step changes the
    // master objective (dropped edges relieve at most their own weight).
    std::vector<int> parent(inst.node_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<int> kept;
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (!selected[e]) continue;
        const Edge& edge = inst.edges()[e];
        const int ra = find(edge.a), rb = find(edge.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        kept.push_back(e);
    }
    const int root_rep = find(inst.root());
    std::vector<int> tree_edges;
    for (int e : kept) {
        if (find(inst.edges()[e].a) == root_rep) tree_edges.push_back(e);
    }

    SteinerTree tree(std::move(tree_edges));
    if (const TreeCheck check = validate_tree(inst, tree); !check)
        throw MilpError("MILP x does not induce a Steiner tree: " +
                        check.reason);

    Cost upper_sum = 0;
    for (int e : tree.edge_ids) upper_sum += inst.edges()[e].upper;
    Cost relief = cut_value(inst, cuts.front(), tree);
    for (std::size_t h = 1; h < cuts.size(); ++h)
        relief = std::min(relief, cut_value(inst, cuts[h], tree));

    std::error_code ec;
    std::filesystem::remove_all(workdir, ec);
    return {std::move(tree), upper_sum - relief};
}

}  // namespace mmrstp
