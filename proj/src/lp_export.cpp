#include "mmrstp/lp_export.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmrstp {

namespace {

// Classic LP readers cap physical lines at 255 characters; wrap well below.
constexpr std::size_t kWrapColumn = 200;

void emit_wrapped(std::ostream& out, const std::vector<std::string>& tokens) {
    std::string line = " ";
    for (const std::string& tok : tokens) {
        if (line.size() + 1 + tok.size() > kWrapColumn && line.size() > 1) {
            out << line << '\n';
            line = "   ";
        }
        if (line.size() > 1) line += ' ';
        line += tok;
    }
    out << line << '\n';
}

std::string coeff_token(Cost numerator, int scale) {
    if (scale == 1 || numerator % 2 == 0)
        return std::to_string(numerator / scale);
    return std::to_string(numerator / 2) + ".5";
}

// Appends "sign [coeff] var" to `tokens`; a unit coefficient is left
// implicit, a leading plus on the first term is dropped.
void push_term(std::vector<std::string>& tokens, bool negative,
               const std::string& coeff, const std::string& var) {
    if (negative)
        tokens.push_back("-");
    else if (!tokens.empty() && tokens.back().back() != ':')
        tokens.push_back("+");
    if (coeff != "1") tokens.push_back(coeff);
    tokens.push_back(var);
}

std::string x_name(const DirectedModel& dm, int arc) {
    return "x_" + std::to_string(dm.arcs[arc].first) + "_" +
           std::to_string(dm.arcs[arc].second);
}

std::string y_name(const DirectedModel& dm, int arc, int k) {
    return x_name(dm, arc).replace(0, 1, "y") + "_" + std::to_string(k);
}

std::vector<int> commodities(const Instance& inst) {
    std::vector<int> ks;
    for (int q : inst.terminals())
        if (q != inst.root()) ks.push_back(q);
    return ks;
}

void emit_flow_and_projection(std::ostream& out, const Instance& inst,
                              const DirectedModel& dm) {
    const std::vector<int> ks = commodities(inst);
    const int arc_count = static_cast<int>(dm.arcs.size());

    for (int k : ks) {
        for (int node = 1; node <= inst.node_count(); ++node) {
            std::vector<std::string> row;
            row.push_back("flow_" + std::to_string(k) + "_" +
                          std::to_string(node) + ":");
            bool any = false;
            for (int a = 0; a < arc_count; ++a) {
                if (dm.arcs[a].second == node) {
                    push_term(row, false, "1", y_name(dm, a, k));
                    any = true;
                } else if (dm.arcs[a].first == node) {
                    push_term(row, true, "1", y_name(dm, a, k));
                    any = true;
                }
            }
            if (!any) continue;
            const int rhs = node == k ? 1 : node == inst.root() ? -1 : 0;
            row.push_back("=");
            row.push_back(std::to_string(rhs));
            emit_wrapped(out, row);
        }
    }

    for (int k : ks)
        for (int a = 0; a < arc_count; ++a) {
            std::vector<std::string> row;
            row.push_back("proj_" + y_name(dm, a, k).substr(2) + ":");
            push_term(row, false, "1", y_name(dm, a, k));
            push_term(row, true, "1", x_name(dm, a));
            row.push_back("<=");
            row.push_back("0");
            emit_wrapped(out, row);
        }
}

void emit_binary_section(std::ostream& out, const Instance& inst,
                         const DirectedModel& dm) {
    out << "Binary\n";
    std::vector<std::string> names;
    for (std::size_t a = 0; a < dm.arcs.size(); ++a)
        names.push_back(x_name(dm, static_cast<int>(a)));
    for (int k : commodities(inst))
        for (std::size_t a = 0; a < dm.arcs.size(); ++a)
            names.push_back(y_name(dm, static_cast<int>(a), k));
    emit_wrapped(out, names);
}

}  // namespace

void export_stp_lp(const Instance& inst, const Scenario& s, std::ostream& out) {
    if (s.costs.size() != static_cast<std::size_t>(inst.edge_count()))
        throw std::invalid_argument("export_stp_lp: scenario size mismatch");
    const DirectedModel dm = bidirect(inst);

    out << "Minimize\n";
    std::vector<std::string> obj;
    obj.push_back("obj:");
    for (std::size_t a = 0; a < dm.arcs.size(); ++a) {
        const Cost c = s.costs[dm.arc_to_edge[a]];
        push_term(obj, false, coeff_token(c, s.scale),
                  x_name(dm, static_cast<int>(a)));
    }
    emit_wrapped(out, obj);

    out << "Subject To\n";
    emit_flow_and_projection(out, inst, dm);
    emit_binary_section(out, inst, dm);
    out << "End\n";
}

void export_master_lp(const Instance& inst, const std::vector<Cut>& cuts,
                      std::ostream& out) {
    if (cuts.empty())
        throw std::invalid_argument(
            "export_master_lp: empty cut pool leaves the master unbounded");
    const DirectedModel dm = bidirect(inst);

    out << "Minimize\n";
    std::vector<std::string> obj;
    obj.push_back("obj:");
    for (std::size_t a = 0; a < dm.arcs.size(); ++a) {
        const Cost u = inst.edges()[dm.arc_to_edge[a]].upper;
        push_term(obj, false, std::to_string(u),
                  x_name(dm, static_cast<int>(a)));
    }
    push_term(obj, true, "1", "theta");
    emit_wrapped(out, obj);

    out << "Subject To\n";
    emit_flow_and_projection(out, inst, dm);

    // theta <= sum_{e in cut} l_e + (u_e - l_e)(x_ab + x_ba)
    for (std::size_t h = 0; h < cuts.size(); ++h) {
        std::vector<std::string> row;
        row.push_back("cut_" + std::to_string(h + 1) + ":");
        push_term(row, false, "1", "theta");
        Cost base = 0;
        for (int e : cuts[h].tree.edge_ids) {
            const Edge& edge = inst.edges()[e];
            base += edge.lower;
            const Cost width = edge.upper - edge.lower;
            if (width == 0) continue;
            push_term(row, true, std::to_string(width), x_name(dm, 2 * e));
            push_term(row, true, std::to_string(width), x_name(dm, 2 * e + 1));
        }
        row.push_back("<=");
        row.push_back(std::to_string(base));
        emit_wrapped(out, row);
    }

    out << "Bounds\n theta free\n";
    emit_binary_section(out, inst, dm);
    out << "End\n";
}

namespace {

template <typename Fn>
void write_file(const std::filesystem::path& path, Fn&& body) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write LP file: " + path.string());
    body(out);
    out.flush();
    if (!out)
        throw std::runtime_error("short write on LP file: " + path.string());
}

}  // namespace

void export_stp_lp_file(const Instance& inst, const Scenario& s,
                        const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { export_stp_lp(inst, s, out); });
}

void export_master_lp_file(const Instance& inst, const std::vector<Cut>& cuts,
                           const std::filesystem::path& path) {
    write_file(path,
               [&](std::ostream& out) { export_master_lp(inst, cuts, out); });
}

}  // namespace mmrstp
