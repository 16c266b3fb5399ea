#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psl/ast.hpp"
#include "psl/rational.hpp"
#include "psl/stylesheet.hpp"

namespace psl
{

struct Figure
{
  std::string name;
  Rational x;           // screen fraction of the figure's centre line
  double height = 0.0;  // fraction of frame height; > 1 is cropped by the frame
  Profile facing = Profile::front;
  int plane = 0;
  friend bool operator==(const Figure &, const Figure &) = default;
};

/// Everything needed to draw one frame. Figures are ordered back to front
/// (highest plane first), then left to right.
struct FrameLayout
{
  int width = 480;
  int height = 270;
  std::vector<Figure> figures;
  std::string caption;
  /// Incoming picture of a dissolve, drawn as dashed outlines.
  std::vector<Figure> ghosts;
  /// Stamp printed in the top-left corner ("in transition").
  std::optional<std::string> stamp;
  friend bool operator==(const FrameLayout &, const FrameLayout &) = default;
};

/// Expects a fully specified composition (see apply_stylesheet).
[[nodiscard]] FrameLayout layout(const Composition & c, const Stylesheet & s);

/// SVG 1.1 text. Byte-identical for equal layouts.
[[nodiscard]] std::string render_frame(const FrameLayout & l);

struct RenderedFrame
{
  std::string filename;  // shot<NN>_frame<MM>.svg, both 1-based
  std::size_t shot = 0;
  bool in_transition = false;
  FrameLayout layout;
  std::string svg;
};

/// One frame per stable timeline entry, plus one stamped frame per dissolve.
/// Instantaneous joins (cuts) produce no frame.
[[nodiscard]] std::vector<RenderedFrame> render_storyboard(const Storyboard & sb, const Stylesheet & s);

}  // namespace psl
