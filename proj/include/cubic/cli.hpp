#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubic/json_io.hpp"

namespace cubic::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr Int kDefaultMaxCoord = 1'000'000;

enum ExitCode : int { ok = 0, inconsistency = 1, usage = 2 };

/// Bound on |coordinate| for CLI inputs; CUBIC_HILBERT_MAX_COORD overrides.
Int max_coordinate();

/// Parses "a,b1,b2,b3,b4,b5,b6"; throws DomainError on bad syntax or range.
DivisorClass parse_class(const std::string& text);

struct Outcome {
    Json result;
    std::vector<std::string> warnings{};
    int exit_code = ExitCode::ok;
};

/// Runs one command on an input echo object. Shared by the argument parser
/// and by `verify`, which replays a saved envelope.
Outcome execute(const std::string& command, const Json& input);

Json envelope(const std::string& command, const Json& input, const Outcome& outcome);

/// Entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubic::cli
