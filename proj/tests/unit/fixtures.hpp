#pragma once

#include <string>

#include "mmrstp/instance.hpp"

namespace fixtures {

// data/TINY1.stp, rebuilt in memory. Edge ids: 0 = (1,2), 1 = (1,3),
// 2 = (2,3). Oracle values used across the suite (all re-derived by
// minmax_regret_bruteforce in test_regret):
//   Z({1,2}) = 2 (optimal), Z({0}) = 6, Z({0,1}) = Z({0,2}) = 7.
inline mmrstp::Instance tiny1() {
    return mmrstp::Instance(
        3, {{1, 2, 4, 8}, {1, 3, 1, 3}, {2, 3, 1, 3}}, {1, 2});
}

// data/TINY2.stp: the midpoint heuristic strictly beats the upper-scenario
// one. Z({0}) = 4 (optimal), Z({1,2}) = 6.
inline mmrstp::Instance tiny2() {
    return mmrstp::Instance(
        3, {{1, 2, 0, 10}, {1, 3, 3, 3}, {2, 3, 3, 3}}, {1, 2});
}

inline std::string data_dir() {
#ifdef MMRSTP_DATA_DIR
    return MMRSTP_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace fixtures
