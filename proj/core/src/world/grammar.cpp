#include "vmg/world/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vmg/util/rng.hpp"

namespace vmg::world {

namespace {

const std::vector<std::string>& standard_tokens() {
  static const std::vector<std::string> tokens = [] {
    std::vector<std::string> t = {"<pad>", "<unk>", "pick", "the"};
    for (int i = 0; i < kNumShapes; ++i) t.emplace_back(shape_name(static_cast<Shape>(i)));
    for (int i = 0; i < kNumColors; ++i) t.emplace_back(color_name(static_cast<Color>(i)));
    for (const char* w : {"on", "top", "of", "leftmost", "rightmost", "nearest",
                          "farthest", "highest", "lowest", "at", "column", "row",
                          "level"}) {
      t.emplace_back(w);
    }
    for (int d = 0; d < kGridSize; ++d) t.push_back(std::to_string(d));
    return t;
  }();
  return tokens;
}

enum class Superlative { kLeftmost, kRightmost, kNearest, kFarthest, kHighest, kLowest };

const char* superlative_word(Superlative s) {
  switch (s) {
    case Superlative::kLeftmost: return "leftmost";
    case Superlative::kRightmost: return "rightmost";
    case Superlative::kNearest: return "nearest";
    case Superlative::kFarthest: return "farthest";
    case Superlative::kHighest: return "highest";
    case Superlative::kLowest: return "lowest";
  }
  return "";
}

// Coordinate picked out by a superlative, and whether the extreme is the max.
// (7,7) is the nearest leftmost cell from the robot's perspective.
std::pair<int Cell::*, bool> superlative_key(Superlative s) {
  switch (s) {
    case Superlative::kLeftmost: return {&Cell::x, true};
    case Superlative::kRightmost: return {&Cell::x, false};
    case Superlative::kNearest: return {&Cell::y, true};
    case Superlative::kFarthest: return {&Cell::y, false};
    case Superlative::kHighest: return {&Cell::z, true};
    case Superlative::kLowest: return {&Cell::z, false};
  }
  return {&Cell::x, true};
}

struct ParsedGoal {
  Shape shape;
  Color color;
  std::optional<Superlative> superlative;
  std::optional<std::pair<Shape, Color>> on_top_of;
  std::optional<Cell> at_cell;
};

class SentenceParser {
 public:
  explicit SentenceParser(std::span<const std::string> tokens) : tokens_(tokens) {}

  ParsedGoal parse() {
    expect("pick");
    expect("the");
    ParsedGoal goal;
    goal.superlative = try_superlative();
    std::tie(goal.color, goal.shape) = attribute();
    if (!done()) {
      if (peek() == "on") {
        expect("on");
        expect("top");
        expect("of");
        expect("the");
        auto [c, s] = attribute();
        goal.on_top_of = {s, c};
      } else if (peek() == "at") {
        expect("at");
        expect("column");
        int x = digit();
        expect("row");
        int y = digit();
        expect("level");
        int z = digit();
        goal.at_cell = Cell{x, y, z};
      } else {
        fail("unexpected token '" + peek() + "'");
      }
    }
    if (!done()) fail("trailing tokens after goal phrase");
    return goal;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("goal sentence: " + what);
  }
  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() {
    if (done()) fail("sentence ended early");
    return tokens_[pos_];
  }
  const std::string& next() {
    const std::string& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view word) {
    if (peek() != word) fail("expected '" + std::string(word) + "', got '" + peek() + "'");
    ++pos_;
  }
  std::optional<Superlative> try_superlative() {
    for (Superlative s :
         {Superlative::kLeftmost, Superlative::kRightmost, Superlative::kNearest,
          Superlative::kFarthest, Superlative::kHighest, Superlative::kLowest}) {
      if (peek() == superlative_word(s)) {
        ++pos_;
        return s;
      }
    }
    return std::nullopt;
  }
  std::pair<Color, Shape> attribute() {
    auto color = color_from_name(peek());
    if (!color) fail("expected a color, got '" + peek() + "'");
    ++pos_;
    auto shape = shape_from_name(peek());
    if (!shape) fail("expected a shape, got '" + peek() + "'");
    ++pos_;
    return {*color, *shape};
  }
  int digit() {
    const std::string& t = next();
    if (t.size() == 1 && t[0] >= '0' && t[0] < '0' + kGridSize) return t[0] - '0';
    fail("expected a grid coordinate, got '" + t + "'");
  }

  std::span<const std::string> tokens_;
  size_t pos_ = 0;
};

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (size_t i = 0; i < tokens_.size(); ++i) index_[tokens_[i]] = static_cast<int>(i);
}

Vocabulary Vocabulary::standard() { return Vocabulary(standard_tokens()); }

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vocabulary file " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  if (tokens.size() < 2 || tokens[0] != "<pad>" || tokens[1] != "<unk>") {
    throw ParseError("vocabulary file must start with <pad> and <unk>: " + path);
  }
  return Vocabulary(std::move(tokens));
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write vocabulary file " + path);
  for (const auto& t : tokens_) out << t << "\n";
}

int Vocabulary::id(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? unk_id() : it->second;
}

const std::string& Vocabulary::token(int id) const {
  if (id < 0 || id >= size()) throw ParameterError("token id out of range");
  return tokens_[id];
}

std::vector<int> Vocabulary::encode(std::span<const std::string> tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(id(t));
  return ids;
}

std::vector<std::string> Vocabulary::decode(std::span<const int> ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(token(i));
  return out;
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::istringstream ss(sentence);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  if (tokens.empty()) throw ParseError("cannot tokenize empty sentence");
  return tokens;
}

Resolution resolve_description(const Layout& layout,
                               std::span<const std::string> sentence) {
  ParsedGoal goal = SentenceParser(sentence).parse();

  std::vector<int> matches;
  for (size_t i = 0; i < layout.blocks.size(); ++i) {
    const Block& b = layout.blocks[i];
    if (b.shape != goal.shape || b.color != goal.color) continue;
    if (goal.at_cell && !(b.cell == *goal.at_cell)) continue;
    if (goal.on_top_of) {
      auto below = layout.support_of(static_cast<int>(i));
      if (!below) continue;
      const Block& s = layout.blocks[*below];
      if (s.shape != goal.on_top_of->first || s.color != goal.on_top_of->second) continue;
    }
    matches.push_back(static_cast<int>(i));
  }

  if (goal.superlative && !matches.empty()) {
    auto [member, want_max] = superlative_key(*goal.superlative);
    int extreme = layout.blocks[matches[0]].cell.*member;
    for (int m : matches) {
      int v = layout.blocks[m].cell.*member;
      extreme = want_max ? std::max(extreme, v) : std::min(extreme, v);
    }
    std::erase_if(matches, [&](int m) { return layout.blocks[m].cell.*member != extreme; });
  }
  return Resolution{std::move(matches)};
}

int resolve_unique(const Layout& layout, std::span<const std::string> sentence) {
  Resolution r = resolve_description(layout, sentence);
  if (r.matches.empty()) throw ResolutionError("no block matches the goal sentence");
  if (!r.unique()) {
    throw ResolutionError("goal sentence is ambiguous: " +
                          std::to_string(r.matches.size()) + " matches");
  }
  return r.index();
}

GoalSpec describe_target(const Layout& layout, int target_index, std::uint64_t seed,
                         int max_tokens) {
  if (target_index < 0 || target_index >= static_cast<int>(layout.blocks.size())) {
    throw ParameterError("target index out of range");
  }
  const Block& target = layout.blocks[target_index];
  const std::string color(color_name(target.color));
  const std::string shape(shape_name(target.shape));

  auto accept = [&](std::vector<std::string> sentence) -> std::optional<GoalSpec> {
    if (static_cast<int>(sentence.size()) > max_tokens) return std::nullopt;
    Resolution r = resolve_description(layout, sentence);
    if (r.unique() && r.index() == target_index) {
      return GoalSpec{layout.id, target_index, std::move(sentence)};
    }
    return std::nullopt;
  };

  // Plain attribute phrase.
  if (auto g = accept({"pick", "the", color, shape})) return *g;

  // Relational candidates, in seeded order for variety.
  Rng rng = make_rng(mix_seed(seed, tag_seed(layout.id), target_index));
  std::vector<int> order = {0, 1};
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Superlative> sups = {Superlative::kLeftmost, Superlative::kRightmost,
                                   Superlative::kNearest,  Superlative::kFarthest,
                                   Superlative::kHighest,  Superlative::kLowest};
  std::shuffle(sups.begin(), sups.end(), rng);

  for (int kind : order) {
    if (kind == 0) {
      if (auto below = layout.support_of(target_index)) {
        const Block& s = layout.blocks[*below];
        if (auto g = accept({"pick", "the", color, shape, "on", "top", "of", "the",
                             std::string(color_name(s.color)),
                             std::string(shape_name(s.shape))})) {
          return *g;
        }
      }
    } else {
      for (Superlative s : sups) {
        if (auto g = accept({"pick", "the", superlative_word(s), color, shape})) return *g;
      }
    }
  }

  // Exact coordinates always resolve uniquely.
  auto g = accept({"pick", "the", color, shape, "at", "column",
                   std::to_string(target.cell.x), "row", std::to_string(target.cell.y),
                   "level", std::to_string(target.cell.z)});
  if (!g) throw ResolutionError("coordinate fallback failed to resolve target");
  return *g;
}

}  // namespace vmg::world
