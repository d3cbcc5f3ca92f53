#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vmg::world {

constexpr int kGridSize = 8;
constexpr int kNumShapes = 2;
constexpr int kNumColors = 8;
constexpr int kNumClasses = kNumShapes * kNumColors;

enum class Shape : std::uint8_t { kCube = 0, kPyramid = 1 };

enum class Color : std::uint8_t {
  kYellow = 0,
  kWhite,
  kGray,
  kMagenta,
  kBlue,
  kCyan,
  kRed,
  kGreen,
};

std::string_view shape_name(Shape s);
std::string_view color_name(Color c);
std::optional<Shape> shape_from_name(std::string_view name);
std::optional<Color> color_from_name(std::string_view name);

// (shape, color) <-> class index bijection: shape*8 + color, in [0, 15].
int class_index(Shape s, Color c);
std::pair<Shape, Color> class_from_index(int index);
std::string class_name(int index);  // e.g. "cube_red"

// Discrete grid cell, each component in [0, 7].
struct Cell {
  int x = 0;
  int y = 0;
  int z = 0;
  bool operator==(const Cell&) const = default;
};

bool cell_in_grid(const Cell& c);

constexpr double kDefaultCellSizeM = 0.04;

// Centroid of a cell's block volume in table coordinates (meters):
// ((x+0.5)s, (y+0.5)s, (z+0.5)s).
std::array<double, 3> cell_centroid(const Cell& c, double cell_size_m = kDefaultCellSizeM);

struct Block {
  Shape shape = Shape::kCube;
  Color color = Color::kYellow;
  Cell cell;
  bool operator==(const Block&) const = default;
};

// A block-world scene. Valid layouts have no duplicate cells, every block
// above the ground is supported from directly below, and nothing rests on a
// pyramid.
struct Layout {
  std::string id;
  std::vector<Block> blocks;

  std::optional<int> block_at(const Cell& c) const;
  // Index of the block directly beneath `index`, if any.
  std::optional<int> support_of(int index) const;
};

// Returns human-readable descriptions of every invariant violation; empty
// means the layout is valid.
std::vector<std::string> layout_violations(const Layout& layout);

}  // namespace vmg::world
