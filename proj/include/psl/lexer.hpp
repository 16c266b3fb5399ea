#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "psl/ast.hpp"
#include "psl/diagnostic.hpp"

namespace psl
{

enum class TokenKind {
  size,       // BCU ... VLS, or a long form such as "medium close-up"
  name,       // subject identifier
  fraction,   // p/q
  number,     // bare integer; never valid on its own
  comma,
  period,
  kw_on,
  kw_and,
  kw_to,
  kw_with,
  kw_screen,
  kw_at,
  kw_from,
  kw_front,
  kw_back,
  kw_left,
  kw_right,
  kw_center,
  kw_far_left,
  kw_far_right,
  kw_lock,
  kw_pan,
  kw_dolly,
  kw_crane,
  kw_continue_to,
  kw_speaks,
  kw_reacts,
  kw_uses,
  kw_touches,
  kw_crosses,
  kw_enters,
  kw_exits,
  kw_moves,
  kw_cut_to,
  kw_dissolve_to,
  reserved,   // a word that only appears inside multi-word keywords
  invalid,    // unexpected character; already reported by the lexer
  eof,
};

struct Token
{
  TokenKind kind = TokenKind::eof;
  Span span;
  std::optional<Size> size;  // set for TokenKind::size

  [[nodiscard]] std::string_view text(std::string_view source) const
  {
    return source.substr(span.begin, span.size());
  }
};

struct LexResult
{
  std::vector<Token> tokens;  // no trailing eof token
  Diagnostics diagnostics;
};

/// Splits PSL source into tokens. Whitespace and `#` comment lines are skipped;
/// every other byte belongs to exactly one token.
[[nodiscard]] LexResult tokenize(std::string_view source);

[[nodiscard]] std::string_view describe(TokenKind k);

}  // namespace psl
