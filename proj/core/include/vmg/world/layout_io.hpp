#pragma once

#include <string>
#include <vector>

#include "vmg/world/types.hpp"

namespace vmg::world {

// Line-oriented layout text format:
//
//   layout <id>
//   <x> <y> <z> <shape> <color>
//   ...
//
// A file may hold several layouts; each `layout` header starts a new one.
// Blank lines and lines starting with '#' are ignored.
std::vector<Layout> parse_layouts(std::istream& in, const std::string& origin);
std::vector<Layout> load_layout_file(const std::string& path);

// Loads every regular file in a directory, sorted by filename.
std::vector<Layout> load_layout_dir(const std::string& dir);

void save_layouts(const std::vector<Layout>& layouts, const std::string& path);

}  // namespace vmg::world
