#include "vmg/world/types.hpp"

#include <set>
#include <tuple>

#include "vmg/util/errors.hpp"

namespace vmg::world {

namespace {
constexpr std::array<std::string_view, kNumShapes> kShapeNames = {"cube", "pyramid"};
constexpr std::array<std::string_view, kNumColors> kColorNames = {
    "yellow", "white", "gray", "magenta", "blue", "cyan", "red", "green"};
}  // namespace

std::string_view shape_name(Shape s) { return kShapeNames[static_cast<int>(s)]; }
std::string_view color_name(Color c) { return kColorNames[static_cast<int>(c)]; }

std::optional<Shape> shape_from_name(std::string_view name) {
  for (int i = 0; i < kNumShapes; ++i) {
    if (kShapeNames[i] == name) return static_cast<Shape>(i);
  }
  return std::nullopt;
}

std::optional<Color> color_from_name(std::string_view name) {
  for (int i = 0; i < kNumColors; ++i) {
    if (kColorNames[i] == name) return static_cast<Color>(i);
  }
  return std::nullopt;
}

int class_index(Shape s, Color c) {
  return static_cast<int>(s) * kNumColors + static_cast<int>(c);
}

std::pair<Shape, Color> class_from_index(int index) {
  if (index < 0 || index >= kNumClasses) {
    throw ParameterError("class index out of range: " + std::to_string(index));
  }
  return {static_cast<Shape>(index / kNumColors), static_cast<Color>(index % kNumColors)};
}

std::string class_name(int index) {
  auto [s, c] = class_from_index(index);
  return std::string(shape_name(s)) + "_" + std::string(color_name(c));
}

bool cell_in_grid(const Cell& c) {
  return c.x >= 0 && c.x < kGridSize && c.y >= 0 && c.y < kGridSize && c.z >= 0 &&
         c.z < kGridSize;
}

std::array<double, 3> cell_centroid(const Cell& c, double cell_size_m) {
  if (!cell_in_grid(c)) throw ParameterError("cell outside grid");
  if (cell_size_m <= 0.0) throw ParameterError("cell size must be positive");
  return {(c.x + 0.5) * cell_size_m, (c.y + 0.5) * cell_size_m, (c.z + 0.5) * cell_size_m};
}

std::optional<int> Layout::block_at(const Cell& c) const {
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].cell == c) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Layout::support_of(int index) const {
  const Cell& c = blocks[index].cell;
  if (c.z == 0) return std::nullopt;
  return block_at({c.x, c.y, c.z - 1});
}

std::vector<std::string> layout_violations(const Layout& layout) {
  std::vector<std::string> out;
  std::set<std::tuple<int, int, int>> seen;
  for (size_t i = 0; i < layout.blocks.size(); ++i) {
    const Block& b = layout.blocks[i];
    if (!cell_in_grid(b.cell)) {
      out.push_back("block " + std::to_string(i) + " outside grid");
      continue;
    }
    if (!seen.insert(std::tuple(b.cell.x, b.cell.y, b.cell.z)).second) {
      out.push_back("duplicate cell at block " + std::to_string(i));
    }
  }
  for (size_t i = 0; i < layout.blocks.size(); ++i) {
    const Block& b = layout.blocks[i];
    if (b.cell.z > 0) {
      auto below = layout.block_at({b.cell.x, b.cell.y, b.cell.z - 1});
      if (!below) {
        out.push_back("block " + std::to_string(i) + " unsupported");
      } else if (layout.blocks[*below].shape == Shape::kPyramid) {
        out.push_back("block " + std::to_string(i) + " rests on a pyramid");
      }
    }
  }
  return out;
}

}  // namespace vmg::world
