#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "psl/ast.hpp"

namespace psl
{

/// Derivation depth used to bound the fuzzer. A bare "<Size> on <Name>." has depth 1;
/// each extra list item (subject, plane, event, shot) adds one, a profile or screen
/// clause adds one to its subject, and an event carrying a composition is one deeper
/// than that composition.
[[nodiscard]] int derivation_depth(const Storyboard & sb);
[[nodiscard]] int derivation_depth(const Composition & c);

/// Returns a random storyboard text derivable from the grammar with depth at most
/// `max_depth` (values below 1 are treated as 1). Output varies keyword case, size
/// long forms, fraction spelling and whitespace. Actor events only reference
/// subjects on screen, so the result also passes continuity validation without
/// errors. Deterministic for a given seed.
[[nodiscard]] std::string generate_sentence(std::uint64_t seed, int max_depth);

/// Checks the parse/format fixed point on `text`: it parses, its canonical form
/// parses to an equal tree, and formatting is stable. Returns why it fails, if it does.
[[nodiscard]] std::optional<std::string> roundtrip_failure(std::string_view text);

}  // namespace psl
