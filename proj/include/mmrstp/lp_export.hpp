#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "mmrstp/benders.hpp"
#include "mmrstp/scenario.hpp"

namespace mmrstp {

/// Writes the bi-directed multi-commodity flow model of the deterministic
/// STP under scenario `s` in textual LP format. Variables: binary x_i_j per
/// arc, binary y_i_j_k per arc and non-root terminal k. One unit of flow is
/// sent from the root to each k (net outflow 1 at r, net inflow 1 at k).
void export_stp_lp(const Instance& inst, const Scenario& s, std::ostream& out);

/// Writes the min-max regret master restricted to `cuts`: objective
/// sum u_a x_a - theta, the same flow/projection rows, one cut row per pool
/// entry bounding the free variable theta.
void export_master_lp(const Instance& inst, const std::vector<Cut>& cuts,
                      std::ostream& out);

void export_stp_lp_file(const Instance& inst, const Scenario& s,
                        const std::filesystem::path& path);
void export_master_lp_file(const Instance& inst, const std::vector<Cut>& cuts,
                           const std::filesystem::path& path);

}  // namespace mmrstp
