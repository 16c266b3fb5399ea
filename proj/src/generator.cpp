#include "psl/generator.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string_view>
#include <type_traits>
#include <vector>

#include "psl/format.hpp"
#include "psl/parser.hpp"

namespace psl
{

// ---------------------------------------------------------------------------
// depth measure

namespace
{

int depth_of(const SubjectSpec & s) { return 1 + ((s.profile || s.screen) ? 1 : 0); }

int depth_of(const FlatComposition & f)
{
  int d = 0;
  for (const auto & s : f.subjects) d = std::max(d, depth_of(s));
  return d + static_cast<int>(f.subjects.size()) - 1;
}

int depth_of(const ScreenEvent & e)
{
  if (const auto * w = std::get_if<CameraWith>(&e.action)) return depth_of(w->subject);
  if (const auto * target = explicit_target(e)) return 1 + derivation_depth(*target);
  return 1;
}

}  // namespace

int derivation_depth(const Composition & c)
{
  int d = 0;
  for (const auto & f : c.planes) d = std::max(d, depth_of(f));
  return d + static_cast<int>(c.planes.size()) - 1;
}

int derivation_depth(const Storyboard & sb)
{
  int d = 0;
  for (const auto & shot : sb.shots) {
    int sd = derivation_depth(shot.initial);
    for (const auto & e : shot.events) sd = std::max(sd, depth_of(e));
    d = std::max(d, sd + static_cast<int>(shot.events.size()));
  }
  return d + static_cast<int>(sb.shots.size()) - 1;
}

// ---------------------------------------------------------------------------
// generator

namespace
{

constexpr std::array<std::string_view, 8> k_actors = {
  "Brandon", "Phillip", "Rupert", "Janet", "Kenneth", "David", "Kentley", "Wilson"};
constexpr std::array<std::string_view, 5> k_objects = {"rope", "chest", "glass", "book", "candle"};

// Long forms accepted by the lexer, indexed by size ordinal.
constexpr std::array<std::string_view, 7> k_size_long = {
  "big close-up", "close up", "medium close-up", "medium shot", "medium long shot", "long shot",
  "very long shot"};

using Planes = std::vector<std::vector<std::string>>;

class Generator
{
public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string storyboard(int budget)
  {
    const int shots = 1 + below(std::min(budget, 3));
    const int inner = budget - (shots - 1);
    for (int i = 0; i < shots; ++i) {
      if (i > 0) {
        ws_break();
        if (chance(10)) out_ += "\n# next shot\n";
        kw(chance(70) ? "Cut to" : "Dissolve to");
        sp();
      }
      shot(inner);
    }
    return std::move(out_);
  }

private:
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return below(100) < percent; }
  template <typename T>
  const T & pick(const std::vector<T> & v) { return v[below(static_cast<int>(v.size()))]; }

  void sp()
  {
    const int r = below(20);
    if (r == 0) out_ += "  ";
    else if (r == 1) out_ += "\n";
    else if (r == 2) out_ += "\t";
    else out_ += ' ';
  }

  void ws_break() { out_ += chance(80) ? "\n" : " "; }

  // Emits a keyword in a random letter case.
  void kw(std::string_view word)
  {
    const int mode = below(6);
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = word[i];
      if (mode == 1 || (mode == 2 && (i == 0 || word[i - 1] == ' '))) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      } else if (mode == 3 && c >= 'A' && c <= 'Z') {
        c = static_cast<char>(c - 'A' + 'a');
      }
      out_ += c;
    }
  }

  void comma()
  {
    if (chance(10)) out_ += ' ';
    out_ += ',';
    sp();
  }

  void size()
  {
    const int s = below(7);
    if (chance(25)) {
      kw(k_size_long[s]);
    } else {
      kw(to_string(static_cast<Size>(s)));
    }
  }

  void profile()
  {
    const auto p = all_profiles[below(8)];
    kw(to_string(p));
  }

  void fraction(int num, int den)
  {
    // Occasionally spell the fraction unreduced.
    const int k = chance(15) ? 2 : 1;
    out_ += std::to_string(num * k) + "/" + std::to_string(den * k);
  }

  // Twelfths that coincide with an anchor may be written as the anchor.
  void screen(int twelfths)
  {
    std::string_view anchor;
    switch (twelfths) {
      case 2: anchor = "far left"; break;
      case 4: anchor = "left"; break;
      case 6: anchor = "center"; break;
      case 8: anchor = "right"; break;
      case 10: anchor = "far right"; break;
      default: break;
    }
    if (!anchor.empty() && chance(60)) {
      kw("screen");
      sp();
      kw(anchor);
      return;
    }
    kw("at");
    sp();
    Rational r(twelfths, 12);
    fraction(static_cast<int>(r.num()), static_cast<int>(r.den()));
  }

  void subject(std::string_view name, int budget, std::optional<int> twelfths)
  {
    out_ += name;
    if (budget < 2) return;
    if (chance(35)) {
      sp();
      profile();
    }
    if (twelfths) {
      sp();
      screen(*twelfths);
    }
  }

  // Draws n distinct sorted twelfths in 1..11 for explicit screen positions.
  std::vector<int> positions(int n)
  {
    std::vector<int> all(11);
    for (int i = 0; i < 11; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(n);
    std::sort(all.begin(), all.end());
    return all;
  }

  // Emits a composition drawn from the actor pool and returns its plane layout.
  // `required`, when set, is guaranteed to appear.
  Planes composition(int budget, std::optional<std::string_view> required = std::nullopt)
  {
    std::vector<std::string> pool(k_actors.begin(), k_actors.end());
    std::shuffle(pool.begin(), pool.end(), rng_);
    const int planes = 1 + below(std::min(budget, 3));
    const int inner = budget - (planes - 1);
    Planes layout;
    std::size_t next = 0;
    for (int p = 0; p < planes; ++p) {
      const int n = 1 + below(std::min({inner, 4, static_cast<int>(pool.size() - next) - (planes - p - 1)}));
      layout.emplace_back(pool.begin() + next, pool.begin() + next + n);
      next += n;
    }
    if (required) {
      bool present = false;
      for (const auto & pl : layout) {
        present = present || std::find(pl.begin(), pl.end(), *required) != pl.end();
      }
      if (!present) {
        auto & pl = layout[below(static_cast<int>(layout.size()))];
        pl[below(static_cast<int>(pl.size()))] = std::string(*required);
      }
    }
    for (std::size_t p = 0; p < layout.size(); ++p) {
      if (p > 0) comma();
      const auto & names = layout[p];
      const int sub_budget = inner - (static_cast<int>(names.size()) - 1);
      size();
      sp();
      kw("on");
      sp();
      const bool explicit_screens = sub_budget >= 2 && chance(40);
      const auto slots = positions(static_cast<int>(names.size()));
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) {
          sp();
          kw("and");
          sp();
        }
        std::optional<int> where;
        if (explicit_screens && chance(70)) where = slots[i];
        subject(names[i], sub_budget, where);
      }
    }
    return layout;
  }

  static std::vector<std::string> on_screen(const Planes & planes)
  {
    std::vector<std::string> out;
    for (const auto & p : planes) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  void shot(int budget)
  {
    const int max_events = std::min(budget - 1, 6);
    const int events = max_events <= 0 ? 0 : below(max_events + 1);
    const int inner = budget - events;
    Planes state = composition(inner);
    for (int i = 0; i < events; ++i) {
      comma();
      event(inner, state);
    }
    if (chance(10)) out_ += ' ';
    out_ += '.';
  }

  void event(int budget, Planes & state)
  {
    const auto present = on_screen(state);
    std::vector<std::string> absent;
    for (auto a : k_actors) {
      if (std::find(present.begin(), present.end(), a) == present.end()) absent.emplace_back(a);
    }
    std::vector<std::pair<std::size_t, std::size_t>> adjacent;
    for (std::size_t p = 0; p < state.size(); ++p) {
      for (std::size_t i = 0; i + 1 < state[p].size(); ++i) adjacent.emplace_back(p, i);
    }

    enum Choice { lock, with, to, cont, speak, react, use, touch, cross, exit, enter, move };
    std::vector<Choice> options = {lock, with, speak, react, use, touch};
    if (budget >= 2) {
      options.insert(options.end(), {to, cont, move});
      if (!absent.empty()) options.push_back(enter);
    }
    if (!adjacent.empty()) options.push_back(cross);
    if (present.size() >= 2) options.push_back(exit);

    static constexpr std::array<std::string_view, 3> moves = {"pan", "dolly", "crane"};
    const Choice choice = pick(options);
    switch (choice) {
      case lock:
        kw("lock");
        break;
      case with: {
        kw(moves[below(3)]);
        sp();
        kw("with");
        sp();
        const auto & who = pick(present);
        std::optional<int> where;
        if (budget >= 2 && chance(20)) where = 1 + below(11);
        subject(who, budget, where);
        break;
      }
      case to:
        kw(moves[below(3)]);
        sp();
        kw("to");
        sp();
        state = composition(budget - 1);
        break;
      case cont:
        kw("continue to");
        sp();
        state = composition(budget - 1);
        break;
      case speak:
        out_ += pick(present);
        sp();
        kw("speaks");
        break;
      case react:
        out_ += pick(present);
        sp();
        kw("reacts");
        if (chance(50)) {
          sp();
          kw("to");
          sp();
          out_ += k_actors[below(static_cast<int>(k_actors.size()))];
        }
        break;
      case use:
      case touch:
        out_ += pick(present);
        sp();
        kw(choice == use ? "uses" : "touches");
        sp();
        out_ += k_objects[below(static_cast<int>(k_objects.size()))];
        break;
      case cross: {
        const auto [p, i] = adjacent[below(static_cast<int>(adjacent.size()))];
        auto & plane = state[p];
        const bool left_first = chance(50);
        out_ += left_first ? plane[i] : plane[i + 1];
        sp();
        kw("crosses");
        sp();
        out_ += left_first ? plane[i + 1] : plane[i];
        std::swap(plane[i], plane[i + 1]);
        break;
      }
      case exit: {
        const auto who = pick(present);
        out_ += who;
        sp();
        kw("exits");
        sp();
        kw(chance(50) ? "left" : "right");
        for (auto & pl : state) pl.erase(std::remove(pl.begin(), pl.end(), who), pl.end());
        state.erase(std::remove_if(state.begin(), state.end(), [](const auto & pl) { return pl.empty(); }),
                    state.end());
        break;
      }
      case enter: {
        const auto who = pick(absent);
        out_ += who;
        sp();
        kw("enters");
        sp();
        kw("from");
        sp();
        kw(chance(50) ? "left" : "right");
        sp();
        kw("to");
        sp();
        state = composition(budget - 1, who);
        break;
      }
      case move: {
        const auto who = pick(present);
        out_ += who;
        sp();
        kw("moves");
        sp();
        kw("to");
        sp();
        state = composition(budget - 1, who);
        break;
      }
    }
  }

  std::mt19937_64 rng_;
  std::string out_;
};

}  // namespace

std::string generate_sentence(std::uint64_t seed, int max_depth)
{
  return Generator(seed).storyboard(std::max(max_depth, 1));
}

std::optional<std::string> roundtrip_failure(std::string_view text)
{
  const auto first = parse_storyboard(text);
  if (!first.value) {
    const auto & d = first.diagnostics.front();
    return "input does not parse: " + d.code + " " + d.message;
  }
  const std::string canonical = format(*first.value);
  const auto second = parse_storyboard(canonical);
  if (!second.value) return "canonical form does not parse: " + canonical;
  if (!(*second.value == *first.value)) return "canonical form parses to a different tree: " + canonical;
  if (format(*second.value) != canonical) return "formatting is not stable: " + canonical;
  return std::nullopt;
}

}  // namespace psl
