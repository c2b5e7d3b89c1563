#include "mmrstp/instgen.hpp"

#include <stdexcept>
#include <vector>

#include "mmrstp/rng.hpp"

namespace mmrstp {

const char* gen_method_name(GenMethod m) {
    switch (m) {
        case GenMethod::Be: return "be";
        case GenMethod::Mo: return "mo";
        case GenMethod::Kz: return "kz";
    }
    throw std::invalid_argument("unknown generation method");
}

GenMethod gen_method_from_name(const std::string& name) {
    if (name == "be") return GenMethod::Be;
    if (name == "mo") return GenMethod::Mo;
    if (name == "kz") return GenMethod::Kz;
    throw std::invalid_argument("unknown generation method: " + name +
                                " (expected be, mo or kz)");
}

Rational parse_rational(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("not a decimal in (0,1): " + text);
    };
    std::size_t dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    for (char c : whole + frac)
        if (c < '0' || c > '9') throw bad();
    if (frac.size() > 18) frac.resize(18);  // beyond int64 resolution anyway

    std::int64_t num = 0;
    for (char c : whole + frac) num = num * 10 + (c - '0');
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (num <= 0 || num >= den) throw bad();
    return {num, den};
}

namespace {

Cost floor_div(Cost num, Cost den) {
    Cost q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return q;
}

Cost ceil_div(Cost num, Cost den) { return -floor_div(-num, den); }

}  // namespace

Instance generate(const Instance& base, const GeneratorConfig& cfg) {
    if (!base.degenerate())
        throw std::invalid_argument(
            "generate: base instance must have point intervals (l == u)");
    if (cfg.method == GenMethod::Be &&
        (cfg.beta.num <= 0 || cfg.beta.num >= cfg.beta.den))
        throw std::invalid_argument("generate: beta must lie in (0, 1)");
    if (cfg.method != GenMethod::Be && cfg.m <= 0)
        throw std::invalid_argument("generate: M must be positive");

    SplitMix64 rng(cfg.seed);
    std::vector<Edge> edges = base.edges();
    for (Edge& e : edges) {
        const Cost c = e.lower;
        switch (cfg.method) {
            case GenMethod::Be:
                e.lower = floor_div((cfg.beta.den - cfg.beta.num) * c,
                                    cfg.beta.den);
                e.upper = ceil_div((cfg.beta.den + cfg.beta.num) * c,
                                   cfg.beta.den);
                break;
            case GenMethod::Mo:
                e.lower = rng.uniform(0, cfg.m);
                e.upper = e.lower + rng.uniform(0, cfg.m);
                break;
            case GenMethod::Kz: {
                const Cost mid = rng.uniform(1, cfg.m);
                e.lower = rng.uniform(0, mid);
                e.upper = mid + rng.uniform(0, mid);
                break;
            }
        }
    }

    Instance out(base.node_count(), std::move(edges), base.terminals(),
                 base.root());
    out.set_name(base.name());
    return out;
}

std::vector<std::string> generator_comments(const Instance& base,
                                            const GeneratorConfig& cfg) {
    std::vector<std::string> lines;
    lines.push_back("method: " + std::string(gen_method_name(cfg.method)));
    if (cfg.method == GenMethod::Be)
        lines.push_back("beta: " + std::to_string(cfg.beta.num) + "/" +
                        std::to_string(cfg.beta.den));
    else
        lines.push_back("M: " + std::to_string(cfg.m));
    lines.push_back("seed: " + std::to_string(cfg.seed));
    lines.push_back("base: " + (base.name().empty() ? "?" : base.name()));
    lines.push_back("rng: splitmix64");
    return lines;
}

}  // namespace mmrstp
