#include "vmg/world/layout_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vmg/util/errors.hpp"

namespace vmg::world {

namespace fs = std::filesystem;

std::vector<Layout> parse_layouts(std::istream& in, const std::string& origin) {
  std::vector<Layout> layouts;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    if (first == "layout") {
      std::string id;
      if (!(ss >> id)) fail("layout header missing id");
      layouts.push_back(Layout{id, {}});
      continue;
    }
    if (layouts.empty()) fail("block line before any 'layout' header");
    Block b;
    std::string shape, color;
    int x, y, z;
    std::istringstream bs(line);
    if (!(bs >> x >> y >> z >> shape >> color)) fail("expected 'x y z shape color'");
    auto s = shape_from_name(shape);
    auto c = color_from_name(color);
    if (!s) fail("unknown shape '" + shape + "'");
    if (!c) fail("unknown color '" + color + "'");
    b.shape = *s;
    b.color = *c;
    b.cell = {x, y, z};
    if (!cell_in_grid(b.cell)) fail("cell outside the 8x8x8 grid");
    layouts.back().blocks.push_back(b);
  }
  for (const Layout& l : layouts) {
    auto violations = layout_violations(l);
    if (!violations.empty()) {
      throw ParseError(origin + ": layout '" + l.id + "' invalid: " + violations.front());
    }
  }
  return layouts;
}

std::vector<Layout> load_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open layout file " + path);
  return parse_layouts(in, path);
}

std::vector<Layout> load_layout_dir(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Layout> all;
  for (const auto& f : files) {
    auto part = load_layout_file(f.string());
    all.insert(all.end(), part.begin(), part.end());
  }
  if (all.empty()) throw ParseError("no layouts found under " + dir);
  return all;
}

void save_layouts(const std::vector<Layout>& layouts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write layout file " + path);
  for (const Layout& l : layouts) {
    out << "layout " << l.id << "\n";
    for (const Block& b : l.blocks) {
      out << b.cell.x << " " << b.cell.y << " " << b.cell.z << " "
          << shape_name(b.shape) << " " << color_name(b.color) << "\n";
    }
  }
}

}  // namespace vmg::world
