#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace mmrstp {

/// External MILP solver failures: missing executable, nonzero exit, missing
/// or malformed solution file, values away from integrality.
class MilpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the solver reports the model infeasible.
class MilpInfeasible : public MilpError {
public:
    using MilpError::MilpError;
};

/// Runs `command_template` with {lp} and {sol} substituted and parses the
/// solution file: whitespace-separated `name value` lines, `#` comments
/// allowed. A first token of INFEASIBLE (or UNBOUNDED) raises the matching
/// error. Values within 1e-6 of an integer are snapped.
std::map<std::string, double> external_backend_run(
    const std::filesystem::path& lp_path, const std::string& command_template);

/// Where intermediate {lp}/{sol} files go; defaults to a fresh directory
/// under the system temp path.
std::filesystem::path make_milp_workdir();

}  // namespace mmrstp
