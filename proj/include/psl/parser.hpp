#pragma once

#include <optional>
#include <string_view>

#include "psl/ast.hpp"
#include "psl/diagnostic.hpp"

namespace psl
{

template <typename T>
struct ParseResult
{
  std::optional<T> value;  // present iff diagnostics hold no error
  Diagnostics diagnostics;
};

/// Parses a whole storyboard. Recovery is panic-mode: after a syntax error the
/// parser skips to the end of the current sentence, so each broken shot
/// contributes exactly one error.
[[nodiscard]] ParseResult<Storyboard> parse_storyboard(std::string_view source);

/// Parses a bare composition such as "CU on Anna, MS on Ben and Carl" (no events,
/// no terminating period).
[[nodiscard]] ParseResult<Composition> parse_composition(std::string_view source);

}  // namespace psl
