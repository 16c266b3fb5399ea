#include "psl/parser.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "psl/lexer.hpp"

namespace psl
{
namespace
{

// Thrown after the error has been recorded; unwinds to the enclosing shot.
struct SyntaxError
{
};

class Parser
{
public:
  Parser(std::string_view source, LexResult lexed)
  : source_(source), tokens_(std::move(lexed.tokens)), diags_(std::move(lexed.diagnostics))
  {
    const std::size_t end = source_.size();
    tokens_.push_back(Token{TokenKind::eof, Span{end, end}, std::nullopt});
  }

  bool empty() const { return tokens_.size() == 1; }

  Diagnostics take_diagnostics() { return std::move(diags_); }

  void report_empty(std::string_view what)
  {
    diags_.push_back(Diagnostic{Severity::error, codes::empty_storyboard, Span{0, source_.size()},
                                std::string(what)});
  }

  std::optional<Storyboard> storyboard()
  {
    Storyboard sb;
    bool ok = true;
    while (true) {
      if (auto shot = shot_recovering()) {
        sb.shots.push_back(std::move(*shot));
      } else {
        ok = false;
      }
      if (at(TokenKind::eof)) break;

      if (at(TokenKind::kw_cut_to) || at(TokenKind::kw_dissolve_to)) {
        sb.joins.push_back(at(TokenKind::kw_cut_to) ? ShotJoin::cut : ShotJoin::dissolve);
        advance();
        continue;
      }
      if (at(TokenKind::size)) {
        error(codes::missing_join, cur().span, "expected 'Cut to' or 'Dissolve to' before the next shot");
        sb.joins.push_back(ShotJoin::cut);
        ok = false;
        continue;
      }
      ok = false;
      try {
        fail_expected("'Cut to', 'Dissolve to' or end of input");
      } catch (const SyntaxError &) {
        const std::size_t begin = cur().span.begin;
        synchronize();
        regions_.push_back(Span{begin, std::max(begin + 1, prev_end())});
        if (at(TokenKind::eof)) break;
        if (at(TokenKind::kw_cut_to) || at(TokenKind::kw_dissolve_to)) continue;
        // Another sentence follows the skipped junk; it still needs a join.
        sb.joins.push_back(ShotJoin::cut);
      }
    }
    collapse_per_sentence();
    if (!ok || has_errors(diags_)) return std::nullopt;
    return sb;
  }

  std::optional<Composition> bare_composition()
  {
    try {
      Composition c = composition();
      if (!at(TokenKind::eof)) fail_expected("',' or end of input");
      if (has_errors(diags_)) return std::nullopt;
      return c;
    } catch (const SyntaxError &) {
      return std::nullopt;
    }
  }

private:
  const Token & cur() const { return tokens_[idx_]; }
  const Token & peek(std::size_t n = 1) const
  {
    return tokens_[std::min(idx_ + n, tokens_.size() - 1)];
  }
  bool at(TokenKind k) const { return cur().kind == k; }
  std::size_t prev_end() const { return idx_ == 0 ? 0 : tokens_[idx_ - 1].span.end; }

  const Token & advance()
  {
    const Token & t = tokens_[idx_];
    if (t.kind != TokenKind::eof) ++idx_;
    return t;
  }

  const Token & expect(TokenKind k, std::string_view what)
  {
    if (!at(k)) fail_expected(what);
    return advance();
  }

  void error(const char * code, Span span, std::string message)
  {
    diags_.push_back(Diagnostic{Severity::error, code, span, std::move(message)});
  }

  // Spans must cover at least one byte; at end of input we point at the last token.
  Span error_span() const
  {
    if (!at(TokenKind::eof)) return cur().span;
    if (idx_ > 0) return tokens_[idx_ - 1].span;
    return Span{0, source_.empty() ? std::size_t{0} : std::size_t{1}};
  }

  [[noreturn]] void fail_expected(std::string_view what)
  {
    // The lexer has already reported invalid characters.
    if (!at(TokenKind::invalid)) {
      std::string found = at(TokenKind::eof)
                            ? std::string("end of input")
                            : "'" + std::string(cur().text(source_)) + "'";
      error(codes::syntax, error_span(), "expected " + std::string(what) + ", found " + found);
    }
    throw SyntaxError{};
  }

  void synchronize()
  {
    while (!at(TokenKind::eof)) {
      if (at(TokenKind::kw_cut_to) || at(TokenKind::kw_dissolve_to)) return;
      if (advance().kind == TokenKind::period) return;
    }
  }

  std::optional<Shot> shot_recovering()
  {
    const std::size_t begin = cur().span.begin;
    std::optional<Shot> out;
    try {
      out = shot();
    } catch (const SyntaxError &) {
      synchronize();
    }
    regions_.push_back(Span{begin, std::max(begin, prev_end())});
    return out;
  }

  // Keeps the first error inside each sentence so one broken shot reports once,
  // even when it also contains several unexpected characters.
  void collapse_per_sentence()
  {
    std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic & a, const Diagnostic & b) {
      return a.span.begin < b.span.begin;
    });
    Diagnostics kept;
    std::vector<bool> region_has_error(regions_.size(), false);
    for (auto & d : diags_) {
      if (d.severity == Severity::error) {
        bool drop = false;
        for (std::size_t i = 0; i < regions_.size(); ++i) {
          const Span r = regions_[i];
          if (d.span.begin >= r.begin && d.span.begin < r.end) {
            drop = region_has_error[i];
            region_has_error[i] = true;
            break;
          }
        }
        if (drop) continue;
      }
      kept.push_back(std::move(d));
    }
    diags_ = std::move(kept);
  }

  Shot shot()
  {
    Shot s;
    const std::size_t begin = cur().span.begin;
    s.initial = composition();
    while (at(TokenKind::comma)) {
      advance();
      s.events.push_back(event());
    }
    expect(TokenKind::period, "',' or '.'");
    s.loc.span = Span{begin, prev_end()};
    return s;
  }

  Composition composition()
  {
    Composition c;
    const std::size_t begin = cur().span.begin;
    c.planes.push_back(flat());
    while (at(TokenKind::comma) && peek().kind == TokenKind::size) {
      advance();
      c.planes.push_back(flat());
    }
    c.loc.span = Span{begin, prev_end()};
    return c;
  }

  FlatComposition flat()
  {
    FlatComposition f;
    const std::size_t begin = cur().span.begin;
    f.size = *expect(TokenKind::size, "shot size").size;
    expect(TokenKind::kw_on, "'on'");
    f.subjects.push_back(subject());
    while (at(TokenKind::kw_and)) {
      advance();
      f.subjects.push_back(subject());
    }
    f.loc.span = Span{begin, prev_end()};
    return f;
  }

  std::string name()
  {
    // Keywords, size names and phrase words all read as words but cannot name anyone.
    const TokenKind k = cur().kind;
    if (k == TokenKind::reserved || k == TokenKind::size || (k >= TokenKind::kw_on && k <= TokenKind::kw_dissolve_to)) {
      error(codes::reserved_name, cur().span,
            "'" + std::string(cur().text(source_)) + "' is reserved and cannot name a subject");
      throw SyntaxError{};
    }
    return std::string(expect(TokenKind::name, "name").text(source_));
  }

  SubjectSpec subject()
  {
    SubjectSpec s;
    const std::size_t begin = cur().span.begin;
    s.name = name();
    s.profile = profile();
    s.screen = screen();
    s.loc.span = Span{begin, prev_end()};
    return s;
  }

  std::optional<Profile> profile()
  {
    switch (cur().kind) {
      case TokenKind::kw_front: advance(); return Profile::front;
      case TokenKind::kw_back: advance(); return Profile::back;
      case TokenKind::kw_left: advance(); return Profile::left;
      case TokenKind::kw_right: advance(); return Profile::right;
      case TokenKind::fraction: break;
      default: return std::nullopt;
    }
    if (cur().text(source_) != "3/4") return std::nullopt;
    advance();
    if (at(TokenKind::kw_left)) {
      advance();
      return Profile::three_quarter_left;
    }
    if (at(TokenKind::kw_right)) {
      advance();
      return Profile::three_quarter_front_right;
    }
    expect(TokenKind::kw_back, "'left', 'right' or 'back' after '3/4'");
    if (at(TokenKind::kw_left)) {
      advance();
      return Profile::three_quarter_back_left;
    }
    expect(TokenKind::kw_right, "'left' or 'right' after '3/4 back'");
    return Profile::three_quarter_back_right;
  }

  std::optional<ScreenPosition> screen()
  {
    if (at(TokenKind::kw_screen)) {
      advance();
      switch (cur().kind) {
        case TokenKind::kw_far_left: advance(); return ScreenPosition{Anchor::far_left};
        case TokenKind::kw_left: advance(); return ScreenPosition{Anchor::left};
        case TokenKind::kw_center: advance(); return ScreenPosition{Anchor::center};
        case TokenKind::kw_right: advance(); return ScreenPosition{Anchor::right};
        case TokenKind::kw_far_right: advance(); return ScreenPosition{Anchor::far_right};
        default: fail_expected("'far left', 'left', 'center', 'right' or 'far right'");
      }
    }
    if (!at(TokenKind::kw_at)) return std::nullopt;
    advance();
    const Token & t = expect(TokenKind::fraction, "fraction such as 1/3");
    std::optional<Rational> value;
    try {
      value = Rational::parse(t.text(source_));
    } catch (const std::exception &) {
      value.reset();
    }
    if (!value || *value <= Rational(0) || *value >= Rational(1)) {
      error(codes::bad_fraction, t.span,
            "screen fraction '" + std::string(t.text(source_)) + "' must lie strictly between 0 and 1");
      throw SyntaxError{};
    }
    return ScreenPosition{*value};
  }

  Side side()
  {
    if (at(TokenKind::kw_left)) {
      advance();
      return Side::left;
    }
    expect(TokenKind::kw_right, "'left' or 'right'");
    return Side::right;
  }

  ScreenEvent event()
  {
    ScreenEvent e;
    const std::size_t begin = cur().span.begin;
    switch (cur().kind) {
      case TokenKind::kw_lock:
        advance();
        e.action = Lock{};
        break;
      case TokenKind::kw_pan:
      case TokenKind::kw_dolly:
      case TokenKind::kw_crane: {
        const CameraMove move = at(TokenKind::kw_pan)     ? CameraMove::pan
                                : at(TokenKind::kw_dolly) ? CameraMove::dolly
                                                          : CameraMove::crane;
        advance();
        if (at(TokenKind::kw_with)) {
          advance();
          e.action = CameraWith{move, subject()};
        } else {
          expect(TokenKind::kw_to, "'with' or 'to'");
          e.action = CameraTo{move, composition()};
        }
        break;
      }
      case TokenKind::kw_continue_to:
        advance();
        e.action = ContinueTo{composition()};
        break;
      case TokenKind::name:
      case TokenKind::reserved:
        e.action = actor_action();
        break;
      default:
        fail_expected("screen event");
    }
    e.loc.span = Span{begin, prev_end()};
    return e;
  }

  ActorAction actor_action()
  {
    ActorAction a;
    a.actor = name();
    switch (cur().kind) {
      case TokenKind::kw_speaks:
        advance();
        a.verb = Speak{};
        break;
      case TokenKind::kw_reacts: {
        advance();
        React r;
        if (at(TokenKind::kw_to)) {
          advance();
          r.to = name();
        }
        a.verb = r;
        break;
      }
      case TokenKind::kw_uses:
        advance();
        a.verb = Use{name()};
        break;
      case TokenKind::kw_touches:
        advance();
        a.verb = Touch{name()};
        break;
      case TokenKind::kw_crosses:
        advance();
        a.verb = Cross{name()};
        break;
      case TokenKind::kw_enters: {
        advance();
        expect(TokenKind::kw_from, "'from'");
        Enter en;
        en.from = side();
        expect(TokenKind::kw_to, "'to'");
        en.target = composition();
        a.verb = std::move(en);
        break;
      }
      case TokenKind::kw_exits:
        advance();
        a.verb = Exit{side()};
        break;
      case TokenKind::kw_moves:
        advance();
        expect(TokenKind::kw_to, "'to'");
        a.verb = Move{composition()};
        break;
      default:
        fail_expected("actor verb (speaks, reacts, uses, touches, crosses, enters, exits, moves)");
    }
    return a;
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  Diagnostics diags_;
  std::vector<Span> regions_;
  std::size_t idx_ = 0;
};

}  // namespace

ParseResult<Storyboard> parse_storyboard(std::string_view source)
{
  Parser p(source, tokenize(source));
  ParseResult<Storyboard> out;
  if (p.empty()) {
    p.report_empty("empty storyboard");
  } else {
    out.value = p.storyboard();
  }
  out.diagnostics = p.take_diagnostics();
  if (has_errors(out.diagnostics)) out.value.reset();
  return out;
}

ParseResult<Composition> parse_composition(std::string_view source)
{
  Parser p(source, tokenize(source));
  ParseResult<Composition> out;
  if (p.empty()) {
    p.report_empty("empty composition");
  } else {
    out.value = p.bare_composition();
  }
  out.diagnostics = p.take_diagnostics();
  if (has_errors(out.diagnostics)) out.value.reset();
  return out;
}

}  // namespace psl
