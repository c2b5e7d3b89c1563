#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmrstp/instance.hpp"

namespace mmrstp {

/// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the SteinLib STP format or its interval extension.
///
/// Recognized sections: Comment (skipped), Graph (`Nodes n`, `Edges m`,
/// `E i j c` or `E i j l u`), Terminals (`Terminals k`, `T i`, optional
/// `Root i`). Keywords are case-insensitive; `#` starts a comment line;
/// unknown sections (Coordinates, ...) are skipped up to their END. A plain
/// `E i j c` line yields the degenerate interval l = u = c. The root is the
/// lowest-id terminal unless a `Root` line overrides it.
Instance parse_steinlib(std::istream& in);
Instance parse_steinlib(const std::string& text);
Instance load_instance(const std::filesystem::path& file);

/// Writes the interval extension (`E i j l u`). `comments` become `#` lines
/// after the `# mmr-stp interval format v1` header. A `Root` line is written
/// only when the root is not the lowest terminal.
void write_interval_stp(const Instance& inst, std::ostream& out,
                        const std::vector<std::string>& comments = {});
void save_instance(const Instance& inst, const std::filesystem::path& file,
                   const std::vector<std::string>& comments = {});

}  // namespace mmrstp
