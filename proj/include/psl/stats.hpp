#pragma once

#include <map>

#include <json.hpp>

#include "psl/analysis.hpp"
#include "psl/ast.hpp"

namespace psl
{

struct ShotStats
{
  std::size_t shot_count = 0;
  std::size_t event_count = 0;
  std::map<ShotCategory, std::size_t> categories;  // every category present
  /// Over every flat composition written in the text: initial pictures and
  /// explicit targets alike.
  std::map<Size, std::size_t> sizes;
  std::map<EventKind, std::size_t> events;  // every event kind present
  [[nodiscard]] double mean_events_per_shot() const;
};

[[nodiscard]] ShotStats shot_stats(const Storyboard & sb);
[[nodiscard]] nlohmann::json to_json(const ShotStats & s);

}  // namespace psl
