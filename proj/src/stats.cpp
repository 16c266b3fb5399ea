#include "psl/stats.hpp"

#include "psl/json_io.hpp"

namespace psl
{

double ShotStats::mean_events_per_shot() const
{
  return shot_count == 0 ? 0.0 : static_cast<double>(event_count) / static_cast<double>(shot_count);
}

ShotStats shot_stats(const Storyboard & sb)
{
  ShotStats st;
  for (auto c : {ShotCategory::simple, ShotCategory::complex, ShotCategory::composite}) st.categories[c] = 0;
  for (int i = 0; i <= static_cast<int>(Size::VLS); ++i) st.sizes[static_cast<Size>(i)] = 0;
  for (auto k : all_event_kinds()) st.events[k] = 0;

  auto count_sizes = [&](const Composition & c) {
    for (const auto & plane : c.planes) ++st.sizes[plane.size];
  };
  for (const auto & shot : sb.shots) {
    ++st.shot_count;
    ++st.categories[classify_shot(shot)];
    count_sizes(shot.initial);
    for (const auto & e : shot.events) {
      ++st.event_count;
      ++st.events[kind_of(e)];
      if (const auto * target = explicit_target(e)) count_sizes(*target);
    }
  }
  return st;
}

nlohmann::json to_json(const ShotStats & s)
{
  nlohmann::json categories = nlohmann::json::object();
  for (const auto & [c, n] : s.categories) categories[std::string(to_string(c))] = n;
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto & [z, n] : s.sizes) sizes[std::string(to_string(z))] = n;
  nlohmann::json events = nlohmann::json::object();
  for (const auto & [k, n] : s.events) events[std::string(to_string(k))] = n;
  return {{"psl_schema", schema_version},       {"shot_count", s.shot_count},
          {"event_count", s.event_count},       {"mean_events_per_shot", s.mean_events_per_shot()},
          {"categories", std::move(categories)}, {"sizes", std::move(sizes)},
          {"events", std::move(events)}};
}

}  // namespace psl
