#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psl::cli
{

/// Exit codes shared by every subcommand.
enum exit_code : int { ok = 0, input_error = 1, usage_error = 2 };

/// Runs `psl <args...>` (program name excluded) against the given streams.
[[nodiscard]] int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace psl::cli
