#include "exchange/subset_mask.hpp"

#include <stdexcept>

namespace exchange {

namespace {

void check_element(int e) {
  if (e < 1 || e > kMaxGroundSize) throw std::out_of_range("element " + std::to_string(e) + " outside 1..64");
}

}  // namespace

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  SubsetMask m;
  for (int e : elements) {
    check_element(e);
    m = m.with(e);
  }
  return m;
}

SubsetMask SubsetMask::of(const std::vector<int>& elements) {
  SubsetMask m;
  for (int e : elements) {
    check_element(e);
    m = m.with(e);
  }
  return m;
}

SubsetMask SubsetMask::range(int lo, int hi) {
  SubsetMask m;
  for (int e = lo; e <= hi; ++e) {
    check_element(e);
    m = m.with(e);
  }
  return m;
}

SubsetMask SubsetMask::full(int n) { return range(1, n); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace exchange
