#include "exchange/extraction.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "exchange/errors.hpp"
#include "exchange/family_io.hpp"

namespace exchange {

std::uint64_t ExtractionTree::expected_vertex_count(int s, int t) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int i = 0; i <= t; ++i) {
    total += level;
    if (total > kMaxTreeVertices) return total;
    level *= static_cast<std::uint64_t>(s);
  }
  return total;
}

std::variant<SubsetMask, ExtractionFailure> pick_level_set(const Family& family, SubsetMask member,
                                                           SubsetMask excluded, int s) {
  const int n = family.ground_size();
  SubsetMask chosen;
  SubsetMask blocked;
  int available = 0;
  for (int y = 1; y <= n; ++y) {
    if (excluded.contains(y)) continue;
    if (family.contains(member.with(y))) {
      if (available < s) chosen = chosen.with(y);
      ++available;
    } else {
      blocked = blocked.with(y);
    }
  }
  if (available >= s) return chosen;
  return ExtractionFailure{member.elements(), member, excluded, blocked, available, s};
}

std::variant<ExtractionTree, ExtractionFailure> extract_tree(const Family& family, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("extraction needs s, t >= 1");
  if (!family.contains(SubsetMask())) throw std::invalid_argument("extraction needs the empty set in the family");
  if (ExtractionTree::expected_vertex_count(s, t) > kMaxTreeVertices) {
    throw ScaleError("extraction tree would exceed " + std::to_string(kMaxTreeVertices) + " vertices");
  }

  ExtractionTree tree{s, t, {}};
  std::optional<ExtractionFailure> failure;

  // excluded = union of the level sets of strict ancestors.
  auto grow = [&](auto&& self, int parent, std::vector<int> labels, SubsetMask member, SubsetMask excluded) -> void {
    const int index = static_cast<int>(tree.vertices.size());
    const int level = static_cast<int>(labels.size());
    tree.vertices.push_back(TreeVertex{level, labels, member, std::nullopt, parent});
    if (level == t) return;

    auto picked = pick_level_set(family, member, excluded, s);
    if (auto* f = std::get_if<ExtractionFailure>(&picked)) {
      f->path_labels = labels;
      failure = std::move(*f);
      return;
    }
    const SubsetMask level_set = std::get<SubsetMask>(picked);
    tree.vertices[static_cast<std::size_t>(index)].level_set = level_set;
    for (int x : level_set.elements()) {
      if (failure) return;
      std::vector<int> child_labels = labels;
      child_labels.push_back(x);
      self(self, index, std::move(child_labels), member.with(x), excluded | level_set);
    }
  };
  grow(grow, -1, {}, SubsetMask(), SubsetMask());

  if (failure) return *failure;
  return tree;
}

TreeParams thm2_default_params(long long n) {
  if (n < 2) throw std::invalid_argument("tree parameters need n >= 2");
  const double log_n = std::log2(static_cast<double>(n));
  const double root_n = std::sqrt(static_cast<double>(n));
  TreeParams p;
  p.raw_s = static_cast<long long>(std::floor(root_n / (log_n * log_n)));
  p.raw_t = static_cast<long long>(std::floor((1.0 - 1.0 / log_n) * std::sqrt(2.0 * static_cast<double>(n))));
  p.s = static_cast<int>(std::max(1LL, p.raw_s));
  p.t = static_cast<int>(std::max(1LL, p.raw_t));
  if (p.raw_s < 1) p.warnings.push_back("degenerate s=" + std::to_string(p.raw_s) + " clamped to 1");
  if (p.raw_t < 1) p.warnings.push_back("degenerate t=" + std::to_string(p.raw_t) + " clamped to 1");
  // n >= t²/2 + t·s, kept in integers: 2n >= t² + 2ts.
  const long long t_ll = p.t;
  p.feasible = 2 * n >= t_ll * t_ll + 2 * t_ll * p.s;
  return p;
}

namespace {

std::string join_labels(const std::vector<int>& labels) {
  if (labels.empty()) return "-";
  std::string out;
  for (int x : labels) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

void write_tree(std::ostream& out, const ExtractionTree& tree) {
  for (const TreeVertex& v : tree.vertices) {
    out << v.level << ' ' << join_labels(v.path_labels) << ' ' << format_members(v.member, ',') << ' '
        << (v.level_set ? format_members(*v.level_set, ',') : std::string("-")) << '\n';
  }
}

}  // namespace exchange
