#include "psl/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>

#include "psl/analysis.hpp"
#include "psl/compiler.hpp"
#include "psl/format.hpp"

namespace psl
{

namespace
{

// Horizontal component of the facing direction, one per 45 degree sector.
// Positive points screen-right; a left profile looks towards screen-left.
constexpr std::array<double, 8> facing_dx = {0.0, -0.7071, -1.0, -0.7071, 0.0, 0.7071, 1.0, 0.7071};

bool seen_from_behind(Profile p)
{
  return p == Profile::three_quarter_back_left || p == Profile::back || p == Profile::three_quarter_back_right;
}

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view text)
{
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void sort_back_to_front(std::vector<Figure> & figures)
{
  std::stable_sort(figures.begin(), figures.end(), [](const Figure & a, const Figure & b) {
    if (a.plane != b.plane) return a.plane > b.plane;
    return a.x < b.x;
  });
}

void draw_figure(std::string & out, const FrameLayout & l, const Figure & f, bool ghost)
{
  const double frame_h = l.height;
  const double h = f.height * frame_h;
  const double cx = f.x.to_double() * l.width;
  // Long framings stand on a floor line; close framings keep the head near the top.
  const double top = std::max(0.05, 0.95 - f.height) * frame_h;
  const double r = h / 16.0;
  const double cy = top + r;
  const double neck = top + 2.0 * r;
  const double shoulder = neck + 0.08 * h;
  const double hip = top + 0.55 * h;
  const double foot = top + h;
  const double half = 0.125 * h;
  const double dx = facing_dx[static_cast<std::size_t>(f.facing)];
  const double opacity = std::pow(0.85, f.plane);

  out += ghost ? "  <g class=\"ghost\"" : "  <g class=\"figure\"";
  out += " data-name=\"" + escape(f.name) + "\" data-plane=\"" + std::to_string(f.plane) + "\" data-x=\"" +
         f.x.str() + "\" opacity=\"" + num(opacity) + "\"";
  out += ghost ? " stroke-dasharray=\"4 3\">\n" : ">\n";
  out += "    <title>" + escape(f.name) + "</title>\n";
  out += "    <circle class=\"head\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
         (seen_from_behind(f.facing) ? "#333" : "none") + "\"/>\n";
  out += "    <line class=\"nose\" x1=\"" + num(cx + dx * 0.6 * r) + "\" y1=\"" + num(cy) + "\" x2=\"" +
         num(cx + dx * 1.5 * r) + "\" y2=\"" + num(cy + 0.25 * r) + "\"/>\n";
  out += "    <path class=\"body\" d=\"M" + num(cx) + " " + num(neck) + " L" + num(cx) + " " + num(hip) + " M" +
         num(cx - half) + " " + num(shoulder + 0.15 * h) + " L" + num(cx) + " " + num(shoulder) + " L" +
         num(cx + half) + " " + num(shoulder + 0.15 * h) + " M" + num(cx - 0.6 * half) + " " + num(foot) + " L" +
         num(cx) + " " + num(hip) + " L" + num(cx + 0.6 * half) + " " + num(foot) + "\"/>\n";
  out += "  </g>\n";
}

}  // namespace

FrameLayout layout(const Composition & c, const Stylesheet & s)
{
  FrameLayout l;
  const Composition resolved = resolve_positions(c);
  for (std::size_t p = 0; p < resolved.planes.size(); ++p) {
    const auto & plane = resolved.planes[p];
    for (const auto & subject : plane.subjects) {
      l.figures.push_back(Figure{subject.name, subject.screen ? subject.screen->fraction() : Rational(1, 2),
                                 s.figure_height(plane.size), subject.profile.value_or(s.default_profile),
                                 static_cast<int>(p)});
    }
  }
  sort_back_to_front(l.figures);
  l.caption = format(c);
  return l;
}

std::string render_frame(const FrameLayout & l)
{
  const int caption_band = 30;
  const std::string w = std::to_string(l.width);
  const std::string h = std::to_string(l.height);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" +
         std::to_string(l.height + caption_band) + "\" viewBox=\"0 0 " + w + " " +
         std::to_string(l.height + caption_band) + "\">\n";
  out += "  <defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h +
         "\"/></clipPath></defs>\n";
  out += "  <rect class=\"frame\" x=\"0.5\" y=\"0.5\" width=\"" + std::to_string(l.width - 1) + "\" height=\"" +
         std::to_string(l.height - 1) + "\" fill=\"white\" stroke=\"black\"/>\n";
  out += "  <g clip-path=\"url(#frame)\" stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  std::string figures;
  for (const auto & f : l.ghosts) draw_figure(figures, l, f, true);
  for (const auto & f : l.figures) draw_figure(figures, l, f, false);
  // indent figure groups one level inside the clip group
  std::size_t start = 0;
  while (start < figures.size()) {
    const std::size_t end = figures.find('\n', start);
    out += "  " + figures.substr(start, end - start + 1);
    start = end + 1;
  }
  out += "  </g>\n";
  if (l.stamp) {
    out += "  <text class=\"stamp\" x=\"8\" y=\"18\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c00\">" +
           escape(*l.stamp) + "</text>\n";
  }
  out += "  <text class=\"caption\" x=\"" + std::to_string(l.width / 2) + "\" y=\"" +
         std::to_string(l.height + 20) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         escape(l.caption) + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::vector<RenderedFrame> render_storyboard(const Storyboard & sb, const Stylesheet & s)
{
  const Timeline t = timeline(sb, s);
  std::vector<RenderedFrame> frames;
  std::map<std::size_t, int> per_shot;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const TimelineEntry & e = t.entries[i];
    if (e.in_transition && e.t0 == e.t1) continue;
    RenderedFrame frame;
    frame.shot = e.shot_index;
    frame.in_transition = e.in_transition;
    frame.layout = layout(e.composition, s);
    if (e.in_transition && i + 1 < t.entries.size()) {
      const Composition & incoming = t.entries[i + 1].composition;
      frame.layout.ghosts = layout(incoming, s).figures;
      frame.layout.stamp = "in transition";
      frame.layout.caption += " / " + e.label + " to " + format(incoming);
    }
    char name[48];
    std::snprintf(name, sizeof name, "shot%02zu_frame%02d.svg", e.shot_index + 1, ++per_shot[e.shot_index]);
    frame.filename = name;
    frame.svg = render_frame(frame.layout);
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace psl
