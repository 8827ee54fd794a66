#include "reservekit/render.hpp"

#include <cstdio>
#include <string_view>

#include "reservekit/error.hpp"

namespace reservekit {
namespace {

constexpr int kCell = 48;
constexpr int kMargin = 16;
constexpr int kTitleHeight = 28;
constexpr int kCaptionHeight = 28;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string escape(std::string_view text) {
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

void check_panel(const RenderPanel& panel) {
  panel.annotations.validate();
  if (panel.x.size() != panel.annotations.parcel_count())
    throw Error(ErrorCode::length_mismatch, "panel solution length differs from grid size");
}

}  // namespace

std::vector<std::pair<double, double>> annotation_layout(std::size_t species) {
  switch (species) {
    case 0: return {};
    case 1: return {{0.5, 0.5}};
    case 2: return {{0.5, 0.3}, {0.5, 0.72}};
    case 3: return {{0.28, 0.28}, {0.72, 0.28}, {0.5, 0.74}};
    case 4: return {{0.27, 0.27}, {0.73, 0.27}, {0.27, 0.75}, {0.73, 0.75}};
    case 5: return {{0.24, 0.22}, {0.76, 0.22}, {0.5, 0.5}, {0.24, 0.8}, {0.76, 0.8}};
    default:
      throw Error(ErrorCode::layout_unsupported,
                  "no per-slot layout for " + std::to_string(species) + " species");
  }
}

std::int64_t panel_similarity(const RenderSpec& spec) {
  if (spec.panels.size() != 2)
    throw Error(ErrorCode::invalid_argument, "similarity needs exactly two panels");
  const auto& a = spec.panels[0].x;
  const auto& b = spec.panels[1].x;
  if (a.size() != b.size())
    throw Error(ErrorCode::length_mismatch, "panels cover different parcel counts");
  std::int64_t same = 0;
  for (std::size_t p = 0; p < a.size(); ++p) same += (a[p] != 0) == (b[p] != 0) ? 1 : 0;
  return same;
}

std::string similarity_caption(const RenderSpec& spec) {
  return std::to_string(panel_similarity(spec)) + "/" +
         std::to_string(spec.panels[0].x.size()) + " parcels have the same protection status";
}

std::string render_grid(const RenderSpec& spec) {
  if (spec.panels.empty()) throw Error(ErrorCode::invalid_argument, "nothing to render");
  for (const auto& panel : spec.panels) check_panel(panel);
  const int n = spec.panels.front().annotations.n;
  for (const auto& panel : spec.panels) {
    if (panel.annotations.n != n)
      throw Error(ErrorCode::length_mismatch, "panels have different grid sizes");
  }
  const bool pair = spec.panels.size() == 2;

  const int panel_size = n * kCell;
  const int width = kMargin + static_cast<int>(spec.panels.size()) * (panel_size + kMargin);
  const int height = kMargin + kTitleHeight + panel_size + (pair ? kCaptionHeight : 0) + kMargin;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";

  for (std::size_t k = 0; k < spec.panels.size(); ++k) {
    const auto& panel = spec.panels[k];
    const std::size_t species = panel.annotations.species_count();
    std::vector<std::pair<double, double>> slots;
    bool combined = false;
    try {
      slots = annotation_layout(species);
    } catch (const Error&) {
      combined = true;
    }
    const int font = species <= 2 ? 13 : 10;
    const int x0 = kMargin + static_cast<int>(k) * (panel_size + kMargin);
    const int y0 = kMargin + kTitleHeight;

    svg += "<g class=\"panel\">\n";
    svg += "<text x=\"" + fmt(x0 + panel_size / 2.0) + "\" y=\"" + fmt(kMargin + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" +
           escape(panel.title) + "</text>\n";
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const auto p = static_cast<std::size_t>(r) * n + c;
        const int cx = x0 + c * kCell;
        const int cy = y0 + r * kCell;
        const std::string& fill = panel.x[p] ? spec.palette.preserved : spec.palette.unpreserved;
        svg += "<rect class=\"cell\" x=\"" + std::to_string(cx) + "\" y=\"" +
               std::to_string(cy) + "\" width=\"" + std::to_string(kCell) + "\" height=\"" +
               std::to_string(kCell) + "\" fill=\"" + fill +
               "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        auto label = [&](double fx, double fy, const std::string& text) {
          svg += "<text class=\"count\" x=\"" + fmt(cx + fx * kCell) + "\" y=\"" +
                 fmt(cy + fy * kCell) + "\" font-family=\"sans-serif\" font-size=\"" +
                 std::to_string(font) +
                 "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + text + "</text>\n";
        };
        if (combined) {
          std::string text;
          for (std::size_t i = 0; i < species; ++i) {
            if (i) text += ",";
            text += std::to_string(panel.annotations.at(i, p));
          }
          label(0.5, 0.5, text);
        } else {
          for (std::size_t i = 0; i < species; ++i)
            label(slots[i].first, slots[i].second, std::to_string(panel.annotations.at(i, p)));
        }
      }
    }
    svg += "</g>\n";
  }

  if (pair) {
    svg += "<text class=\"caption\" x=\"" + fmt(width / 2.0) + "\" y=\"" +
           fmt(kMargin + kTitleHeight + panel_size + 20.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" +
           escape(similarity_caption(spec)) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace reservekit
