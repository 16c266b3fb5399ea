#include "psl/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace psl
{
namespace
{

struct WordEntry
{
  std::string_view word;
  TokenKind kind;
  std::optional<Size> size = std::nullopt;
};

constexpr std::array<WordEntry, 31> k_words = {{
  {"bcu", TokenKind::size, Size::BCU},
  {"cu", TokenKind::size, Size::CU},
  {"mcu", TokenKind::size, Size::MCU},
  {"ms", TokenKind::size, Size::MS},
  {"mls", TokenKind::size, Size::MLS},
  {"ls", TokenKind::size, Size::LS},
  {"vls", TokenKind::size, Size::VLS},
  {"on", TokenKind::kw_on},
  {"and", TokenKind::kw_and},
  {"to", TokenKind::kw_to},
  {"with", TokenKind::kw_with},
  {"screen", TokenKind::kw_screen},
  {"at", TokenKind::kw_at},
  {"from", TokenKind::kw_from},
  {"front", TokenKind::kw_front},
  {"back", TokenKind::kw_back},
  {"left", TokenKind::kw_left},
  {"right", TokenKind::kw_right},
  {"center", TokenKind::kw_center},
  {"lock", TokenKind::kw_lock},
  {"pan", TokenKind::kw_pan},
  {"dolly", TokenKind::kw_dolly},
  {"crane", TokenKind::kw_crane},
  {"speaks", TokenKind::kw_speaks},
  {"reacts", TokenKind::kw_reacts},
  {"uses", TokenKind::kw_uses},
  {"touches", TokenKind::kw_touches},
  {"crosses", TokenKind::kw_crosses},
  {"enters", TokenKind::kw_enters},
  {"exits", TokenKind::kw_exits},
  {"moves", TokenKind::kw_moves},
}};

struct PhraseEntry
{
  std::array<std::string_view, 3> words;
  TokenKind kind;
  std::optional<Size> size = std::nullopt;
};

constexpr std::array<PhraseEntry, 12> k_phrases = {{
  {{"big", "close", "up"}, TokenKind::size, Size::BCU},
  {{"close", "up", ""}, TokenKind::size, Size::CU},
  {{"medium", "close", "up"}, TokenKind::size, Size::MCU},
  {{"medium", "shot", ""}, TokenKind::size, Size::MS},
  {{"medium", "long", "shot"}, TokenKind::size, Size::MLS},
  {{"long", "shot", ""}, TokenKind::size, Size::LS},
  {{"very", "long", "shot"}, TokenKind::size, Size::VLS},
  {{"far", "left", ""}, TokenKind::kw_far_left},
  {{"far", "right", ""}, TokenKind::kw_far_right},
  {{"continue", "to", ""}, TokenKind::kw_continue_to},
  {{"cut", "to", ""}, TokenKind::kw_cut_to},
  {{"dissolve", "to", ""}, TokenKind::kw_dissolve_to},
}};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_phrase_word(std::string_view w)
{
  return std::any_of(k_phrases.begin(), k_phrases.end(), [&](const PhraseEntry & p) {
    return std::find(p.words.begin(), p.words.end(), w) != p.words.end();
  });
}

const WordEntry * find_word(std::string_view w)
{
  for (const auto & e : k_words) {
    if (e.word == w) return &e;
  }
  return nullptr;
}

class Lexer
{
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run()
  {
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      lex_one();
    }
    return std::move(out_);
  }

private:
  void skip_trivia()
  {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#' && at_line_start(pos_)) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_line_start(std::size_t p) const
  {
    while (p > 0) {
      const char c = src_[p - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t' && c != '\r') return false;
      --p;
    }
    return true;
  }

  std::size_t word_end(std::size_t p) const
  {
    while (p < src_.size() && is_word_char(src_[p])) ++p;
    return p;
  }

  void push(TokenKind k, std::size_t begin, std::size_t end, std::optional<Size> size = std::nullopt)
  {
    out_.tokens.push_back(Token{k, Span{begin, end}, size});
    pos_ = end;
  }

  void lex_one()
  {
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (c == ',') return push(TokenKind::comma, start, start + 1);
    if (c == '.') return push(TokenKind::period, start, start + 1);
    if (is_digit(c)) return lex_number(start);
    if (is_alpha(c)) return lex_word(start);

    // One invalid token per character; a UTF-8 sequence counts as one character.
    std::size_t end = start + 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xC0) {
      while (end < src_.size() && (static_cast<unsigned char>(src_[end]) & 0xC0) == 0x80) ++end;
    }
    out_.diagnostics.push_back(Diagnostic{Severity::error, codes::unexpected_character,
                                          Span{start, end},
                                          "unexpected character '" +
                                            std::string(src_.substr(start, end - start)) + "'"});
    push(TokenKind::invalid, start, end);
  }

  void lex_number(std::size_t start)
  {
    std::size_t p = start;
    while (p < src_.size() && is_digit(src_[p])) ++p;
    if (p + 1 < src_.size() && src_[p] == '/' && is_digit(src_[p + 1])) {
      ++p;
      while (p < src_.size() && is_digit(src_[p])) ++p;
      return push(TokenKind::fraction, start, p);
    }
    push(TokenKind::number, start, p);
  }

  // Matches the word at `p` (after one separator) against `expected`; returns its end.
  std::optional<std::size_t> match_next_word(std::size_t p, std::string_view expected) const
  {
    std::size_t q = p;
    if (q < src_.size() && src_[q] == '-') {
      ++q;
    } else {
      while (q < src_.size() && is_space(src_[q])) ++q;
      if (q == p) return std::nullopt;
    }
    if (q >= src_.size() || !is_alpha(src_[q])) return std::nullopt;
    const std::size_t e = word_end(q);
    if (lower(src_.substr(q, e - q)) != expected) return std::nullopt;
    return e;
  }

  void lex_word(std::size_t start)
  {
    const std::size_t end = word_end(start);
    const std::string w = lower(src_.substr(start, end - start));

    const PhraseEntry * best = nullptr;
    std::size_t best_end = 0;
    for (const auto & ph : k_phrases) {
      if (ph.words[0] != w) continue;
      std::size_t p = end;
      bool ok = true;
      for (std::size_t i = 1; i < ph.words.size() && !ph.words[i].empty(); ++i) {
        auto next = match_next_word(p, ph.words[i]);
        if (!next) {
          ok = false;
          break;
        }
        p = *next;
      }
      if (ok && p > best_end) {
        best = &ph;
        best_end = p;
      }
    }
    if (best != nullptr) return push(best->kind, start, best_end, best->size);

    if (const auto * e = find_word(w)) return push(e->kind, start, end, e->size);
    if (is_phrase_word(w)) return push(TokenKind::reserved, start, end);
    push(TokenKind::name, start, end);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  LexResult out_;
};

}  // namespace

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

bool is_valid_name(std::string_view name)
{
  if (name.empty() || !is_alpha(name[0])) return false;
  if (!std::all_of(name.begin(), name.end(), is_word_char)) return false;
  const std::string w = lower(name);
  return find_word(w) == nullptr && !is_phrase_word(w);
}

std::string_view describe(TokenKind k)
{
  switch (k) {
    case TokenKind::size: return "shot size";
    case TokenKind::name: return "name";
    case TokenKind::fraction: return "fraction";
    case TokenKind::number: return "number";
    case TokenKind::comma: return "','";
    case TokenKind::period: return "'.'";
    case TokenKind::kw_on: return "'on'";
    case TokenKind::kw_and: return "'and'";
    case TokenKind::kw_to: return "'to'";
    case TokenKind::kw_with: return "'with'";
    case TokenKind::kw_screen: return "'screen'";
    case TokenKind::kw_at: return "'at'";
    case TokenKind::kw_from: return "'from'";
    case TokenKind::kw_front: return "'front'";
    case TokenKind::kw_back: return "'back'";
    case TokenKind::kw_left: return "'left'";
    case TokenKind::kw_right: return "'right'";
    case TokenKind::kw_center: return "'center'";
    case TokenKind::kw_far_left: return "'far left'";
    case TokenKind::kw_far_right: return "'far right'";
    case TokenKind::kw_lock: return "'lock'";
    case TokenKind::kw_pan: return "'pan'";
    case TokenKind::kw_dolly: return "'dolly'";
    case TokenKind::kw_crane: return "'crane'";
    case TokenKind::kw_continue_to: return "'continue to'";
    case TokenKind::kw_speaks: return "'speaks'";
    case TokenKind::kw_reacts: return "'reacts'";
    case TokenKind::kw_uses: return "'uses'";
    case TokenKind::kw_touches: return "'touches'";
    case TokenKind::kw_crosses: return "'crosses'";
    case TokenKind::kw_enters: return "'enters'";
    case TokenKind::kw_exits: return "'exits'";
    case TokenKind::kw_moves: return "'moves'";
    case TokenKind::kw_cut_to: return "'Cut to'";
    case TokenKind::kw_dissolve_to: return "'Dissolve to'";
    case TokenKind::reserved: return "reserved word";
    case TokenKind::invalid: return "invalid character";
    case TokenKind::eof: return "end of input";
  }
  return "token";
}

}  // namespace psl
