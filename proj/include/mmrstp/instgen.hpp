#pragma once

#include <cstdint>
#include <string>

#include "mmrstp/instance.hpp"

namespace mmrstp {

enum class GenMethod { Be, Mo, Kz };

const char* gen_method_name(GenMethod m);
GenMethod gen_method_from_name(const std::string& name);

/// Exact rational in (0,1) for the relative width parameter; floats would make
/// floor/ceil rounding platform-dependent.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 2;
};

/// Parses decimal strings like "0.3" into an exact Rational (3/10).
Rational parse_rational(const std::string& text);

struct GeneratorConfig {
    GenMethod method = GenMethod::Be;
    Rational beta{1, 2};       // BE only
    std::int64_t m = 750;      // MO / KZ only
    std::uint64_t seed = 0;
};

/// Derives an interval instance from a deterministic base (l = u = c
/// everywhere; anything else is rejected). Recipes, applied per edge in edge
/// order with one seeded splitmix64 stream:
///   BE: l = floor((1-beta) c), u = ceil((1+beta) c)   (exact rationals)
///   MO: l ~ U[0, M],          u = l + U[0, M]
///   KZ: c' ~ U[1, M], l ~ U[0, c'], u = c' + U[0, c']
/// Same (base, cfg) always reproduces the same instance bit-exactly.
Instance generate(const Instance& base, const GeneratorConfig& cfg);

/// Header comment lines (method, parameter, seed, base name, rng algorithm)
/// for the instance writer.
std::vector<std::string> generator_comments(const Instance& base,
                                            const GeneratorConfig& cfg);

}  // namespace mmrstp
