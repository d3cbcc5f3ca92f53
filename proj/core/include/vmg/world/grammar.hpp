#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vmg/util/errors.hpp"
#include "vmg/world/types.hpp"

namespace vmg::world {

// Closed token set for goal sentences. Ids are stable: 0 is <pad>, 1 is
// <unk>, the rest follow file order (one token per line, line number = id).
class Vocabulary {
 public:
  static Vocabulary standard();
  static Vocabulary load(const std::string& path);
  void save(const std::string& path) const;

  int id(const std::string& token) const;  // unk_id() for unknown tokens
  const std::string& token(int id) const;
  int size() const { return static_cast<int>(tokens_.size()); }
  int pad_id() const { return 0; }
  int unk_id() const { return 1; }

  std::vector<int> encode(std::span<const std::string> tokens) const;
  std::vector<std::string> decode(std::span<const int> ids) const;

 private:
  explicit Vocabulary(std::vector<std::string> tokens);
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

// Whitespace tokenizer. Joining the result with single spaces reproduces the
// whitespace-normalized sentence. Throws ParseError on empty input.
std::vector<std::string> tokenize(const std::string& sentence);

struct GoalSpec {
  std::string layout_id;
  int target_index = -1;
  std::vector<std::string> sentence;
};

struct ResolutionError : Error {
  using Error::Error;
};

// All blocks matched by a sentence; unique() means exactly one.
struct Resolution {
  std::vector<int> matches;
  bool unique() const { return matches.size() == 1; }
  int index() const { return matches.front(); }
};

// Evaluates a goal sentence against a layout. The grammar is
//
//   sentence    := "pick" "the" [superlative] color shape [locator]
//   locator     := "on" "top" "of" "the" color shape
//                | "at" "column" D "row" D "level" D
//   superlative := leftmost | rightmost | nearest | farthest
//                | highest | lowest
//
// Following the robot's perspective, (7,7) is the nearest leftmost cell:
// "leftmost" selects max x, "nearest" max y, "highest" max z. Superlatives
// keep every block attaining the extreme, so ties stay ambiguous.
//
// Throws ParseError on sentences outside the grammar; an empty match list is
// returned (not thrown) so callers can report ambiguity and misses uniformly.
Resolution resolve_description(const Layout& layout,
                               std::span<const std::string> sentence);

// Throwing convenience wrapper: ResolutionError unless exactly one match.
int resolve_unique(const Layout& layout, std::span<const std::string> sentence);

// Generates a sentence that uniquely identifies `target_index`, preferring
// short attribute phrases, then relational forms, with an exact coordinate
// phrase as the always-unique fallback. Deterministic per seed.
GoalSpec describe_target(const Layout& layout, int target_index, std::uint64_t seed,
                         int max_tokens = 24);

}  // namespace vmg::world
