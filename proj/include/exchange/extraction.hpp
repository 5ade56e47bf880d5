#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exchange/family.hpp"

namespace exchange {

/// A vertex of the extraction tree. `member` is the set of edge labels on the
/// root-to-vertex path; internal vertices carry the level set their children
/// are labelled from.
struct TreeVertex {
  int level = 0;
  std::vector<int> path_labels;
  SubsetMask member;
  std::optional<SubsetMask> level_set;
  int parent = -1;
};

/// The s-ary tree of depth t, vertices in depth-first preorder.
struct ExtractionTree {
  int s = 0;
  int t = 0;
  std::vector<TreeVertex> vertices;

  /// Σ_{i=0}^{t} s^i.
  static std::uint64_t expected_vertex_count(int s, int t);
};

/// No admissible level set at some vertex. `blocked` holds the elements y
/// outside the ancestors' level sets with member ∪ {y} ∉ F.
struct ExtractionFailure {
  std::vector<int> path_labels;
  SubsetMask member;
  SubsetMask excluded;
  SubsetMask blocked;
  int available = 0;  ///< number of unblocked candidates found
  int needed = 0;     ///< s
};

/// The lexicographically smallest s-subset of [n]∖excluded whose elements
/// each extend `member` to a member of F, or the failure certificate.
std::variant<SubsetMask, ExtractionFailure> pick_level_set(const Family& family, SubsetMask member,
                                                           SubsetMask excluded, int s);

/// Grows the tree from F(root) = ∅. Throws std::invalid_argument if s or t
/// is below 1 or ∅ ∉ F, and ScaleError if the tree would exceed
/// kMaxTreeVertices.
std::variant<ExtractionTree, ExtractionFailure> extract_tree(const Family& family, int s, int t);

inline constexpr std::uint64_t kMaxTreeVertices = 10'000'000;

/// Asymptotic parameter choice s = ⌊√n / log²n⌋, t = ⌊(1 − 1/log n)·√(2n)⌋,
/// clamped to at least 1.
struct TreeParams {
  int s = 1;
  int t = 1;
  long long raw_s = 0;
  long long raw_t = 0;
  /// n >= t²/2 + t·s, the inequality that makes every level-set choice succeed.
  bool feasible = false;
  std::vector<std::string> warnings;
};

TreeParams thm2_default_params(long long n);

/// One line per vertex: `level path-labels F(v) X(v)`, comma-separated
/// elements, `-` for empty fields.
void write_tree(std::ostream& out, const ExtractionTree& tree);

}  // namespace exchange
