#include "mmrstp/steinlib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace mmrstp {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" +
                                   tok + "'");
    }
}

}  // namespace

Instance parse_steinlib(std::istream& in) {
    enum class Section { None, Graph, Terminals, Skip };
    Section section = Section::None;

    int line_no = 0;
    int declared_nodes = -1, declared_edges = -1, declared_terminals = -1;
    std::vector<Edge> edges;
    std::vector<int> terminals;
    std::set<std::pair<int, int>> seen_edges;
    int explicit_root = 0;
    bool saw_any = false;

    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        std::string key = lower(tokens[0]);

        // SteinLib magic line ("33D32945 STP File, ...").
        if (!saw_any && key == "33d32945") {
            saw_any = true;
            continue;
        }
        saw_any = true;

        if (key == "eof") break;

        if (key == "section") {
            if (tokens.size() < 2)
                throw ParseError(line_no, "SECTION without a name");
            std::string name = lower(tokens[1]);
            if (name == "graph")
                section = Section::Graph;
            else if (name == "terminals")
                section = Section::Terminals;
            else
                section = Section::Skip;  // Comment, Coordinates, ...
            continue;
        }
        if (key == "end") {
            section = Section::None;
            continue;
        }
        if (section == Section::Skip) continue;

        if (section == Section::Graph) {
            if (key == "nodes") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "malformed Nodes line");
                declared_nodes =
                    static_cast<int>(parse_int(tokens[1], line_no, "node count"));
            } else if (key == "edges") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "malformed Edges line");
                declared_edges =
                    static_cast<int>(parse_int(tokens[1], line_no, "edge count"));
            } else if (key == "e") {
                if (tokens.size() != 4 && tokens.size() != 5)
                    throw ParseError(line_no,
                                     "malformed E line (want 'E i j c' or "
                                     "'E i j l u')");
                Edge e;
                e.a = static_cast<int>(parse_int(tokens[1], line_no, "node id"));
                e.b = static_cast<int>(parse_int(tokens[2], line_no, "node id"));
                if (tokens.size() == 4) {
                    e.lower = e.upper = parse_int(tokens[3], line_no, "cost");
                } else {
                    e.lower = parse_int(tokens[3], line_no, "lower cost");
                    e.upper = parse_int(tokens[4], line_no, "upper cost");
                }
                if (declared_nodes >= 0 &&
                    (e.a < 1 || e.a > declared_nodes || e.b < 1 ||
                     e.b > declared_nodes))
                    throw ParseError(line_no, "edge endpoint out of range");
                if (e.a == e.b) throw ParseError(line_no, "self-loop");
                if (e.lower < 0) throw ParseError(line_no, "negative cost");
                if (e.lower > e.upper)
                    throw ParseError(line_no, "lower > upper");
                auto key_pair = std::minmax(e.a, e.b);
                if (!seen_edges.insert(key_pair).second)
                    throw ParseError(line_no, "duplicate edge");
                edges.push_back(e);
            } else {
                throw ParseError(line_no, "unexpected '" + tokens[0] +
                                              "' in Graph section");
            }
        } else if (section == Section::Terminals) {
            if (key == "terminals") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "malformed Terminals line");
                declared_terminals = static_cast<int>(
                    parse_int(tokens[1], line_no, "terminal count"));
            } else if (key == "t") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "malformed T line");
                int q =
                    static_cast<int>(parse_int(tokens[1], line_no, "node id"));
                if (declared_nodes >= 0 && (q < 1 || q > declared_nodes))
                    throw ParseError(line_no, "terminal out of range");
                terminals.push_back(q);
            } else if (key == "root") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "malformed Root line");
                explicit_root =
                    static_cast<int>(parse_int(tokens[1], line_no, "node id"));
            } else {
                throw ParseError(line_no, "unexpected '" + tokens[0] +
                                              "' in Terminals section");
            }
        } else {
            throw ParseError(line_no,
                             "unexpected '" + tokens[0] + "' outside a section");
        }
    }

    if (declared_nodes < 0)
        throw ParseError(line_no, "missing Graph section / Nodes line");
    if (declared_edges >= 0 &&
        declared_edges != static_cast<int>(edges.size()))
        throw ParseError(line_no, "declared " + std::to_string(declared_edges) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
    if (terminals.empty()) throw ParseError(line_no, "empty terminal set");
    if (declared_terminals >= 0 &&
        declared_terminals != static_cast<int>(terminals.size()))
        throw ParseError(line_no,
                         "declared " + std::to_string(declared_terminals) +
                             " terminals, found " +
                             std::to_string(terminals.size()));

    try {
        if (explicit_root > 0)
            return Instance(declared_nodes, std::move(edges),
                            std::move(terminals), explicit_root);
        return Instance(declared_nodes, std::move(edges), std::move(terminals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Instance parse_steinlib(const std::string& text) {
    std::istringstream in(text);
    return parse_steinlib(in);
}

Instance load_instance(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(0, "cannot open '" + file.string() + "'");
    Instance inst = parse_steinlib(in);
    inst.set_name(file.stem().string());
    return inst;
}

void write_interval_stp(const Instance& inst, std::ostream& out,
                        const std::vector<std::string>& comments) {
    out << "33D32945 STP File, STP Format Version 1.0\n";
    out << "# mmr-stp interval format v1\n";
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "SECTION Graph\n";
    out << "Nodes " << inst.node_count() << "\n";
    out << "Edges " << inst.edge_count() << "\n";
    for (const Edge& e : inst.edges())
        out << "E " << e.a << " " << e.b << " " << e.lower << " " << e.upper
            << "\n";
    out << "END\n\n";
    out << "SECTION Terminals\n";
    out << "Terminals " << inst.terminals().size() << "\n";
    for (int q : inst.terminals()) out << "T " << q << "\n";
    if (inst.root() != inst.terminals().front())
        out << "Root " << inst.root() << "\n";
    out << "END\n\nEOF\n";
}

void save_instance(const Instance& inst, const std::filesystem::path& file,
                   const std::vector<std::string>& comments) {
    std::ofstream out(file);
    if (!out)
        throw std::runtime_error("cannot write '" + file.string() + "'");
    write_interval_stp(inst, out, comments);
}

}  // namespace mmrstp
