#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reservekit/grid.hpp"

namespace reservekit {

struct Palette {
  std::string preserved = "#2e8b57";
  std::string unpreserved = "#e8861e";
};

/// One n x n map: fill from `x`, per-parcel labels from `annotations`.
struct RenderPanel {
  std::string title;
  CountsGrid annotations;
  std::vector<std::uint8_t> x;
};

struct RenderSpec {
  std::vector<RenderPanel> panels;  // one panel, or a side-by-side pair
  Palette palette;
};

/// Label anchor points inside a unit cell, one per species: 1 centred,
/// 2 top/bottom, 3 two-up one-down, 4 corners, 5 corners plus middle in the
/// order top-left, top-right, middle, bottom-left, bottom-right. Throws
/// layout_unsupported for more than five species.
std::vector<std::pair<double, double>> annotation_layout(std::size_t species);

/// Same-status parcel count between the two panels of a pair.
std::int64_t panel_similarity(const RenderSpec& spec);

/// Caption emitted under a rendered pair, e.g.
/// "92/100 parcels have the same protection status".
std::string similarity_caption(const RenderSpec& spec);

/// SVG 1.1 document. Grids with more than five species fall back to a single
/// comma-separated label per cell. Byte-identical output for identical input.
std::string render_grid(const RenderSpec& spec);

}  // namespace reservekit
