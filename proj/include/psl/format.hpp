#pragma once

#include <string>

#include "psl/ast.hpp"

namespace psl
{

/// Canonical text: abbreviated sizes, lowercase keywords, single spaces, one
/// sentence per line, "Cut to"/"Dissolve to" opening each following line. No
/// trailing newline.
[[nodiscard]] std::string format(const Storyboard & sb);
[[nodiscard]] std::string format(const Shot & shot);
[[nodiscard]] std::string format(const Composition & c);
[[nodiscard]] std::string format(const ScreenEvent & e);
[[nodiscard]] std::string format(const SubjectSpec & s);

}  // namespace psl
