#include "exchange/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "exchange/errors.hpp"

namespace exchange {

struct Family::State {
  int n = 0;
  std::string name;
  bool is_explicit = false;
  // Explicit representation.
  std::vector<SubsetMask> members;
  std::vector<std::uint64_t> dense;  // 2^n membership bits, used when n <= kScanLimit
  std::unordered_set<SubsetMask> sparse;
  // Implicit representation.
  ImplicitFamily oracle;
};

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw ScaleError("ground set size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGroundSize));
  }
}

std::uint64_t universe_bits(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Family::Family(std::shared_ptr<const State> state) : state_(std::move(state)) {}

Family::Family() : Family(from_members(0, {})) {}

Family Family::from_members(int n, std::vector<SubsetMask> members, std::string name) {
  check_ground(n);
  const std::uint64_t universe = universe_bits(n);
  for (SubsetMask m : members) {
    if ((m.bits() & ~universe) != 0) {
      throw std::invalid_argument("member " + m.to_string() + " has elements outside [" + std::to_string(n) + "]");
    }
  }
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());

  auto state = std::make_shared<State>();
  state->n = n;
  state->name = std::move(name);
  state->is_explicit = true;
  if (n <= kScanLimit) {
    state->dense.assign(((std::uint64_t{1} << n) + 63) / 64, 0);
    for (SubsetMask m : members) state->dense[m.bits() >> 6] |= std::uint64_t{1} << (m.bits() & 63);
  } else {
    state->sparse.insert(members.begin(), members.end());
  }
  state->members = std::move(members);
  return Family(std::move(state));
}

Family Family::from_oracle(int n, ImplicitFamily spec) {
  check_ground(n);
  if (!spec.contains) throw std::invalid_argument("implicit family needs a membership predicate");
  auto state = std::make_shared<State>();
  state->n = n;
  state->name = spec.name;
  state->oracle = std::move(spec);
  return Family(std::move(state));
}

int Family::ground_size() const { return state_->n; }
bool Family::is_explicit() const { return state_->is_explicit; }
const std::string& Family::name() const { return state_->name; }

bool Family::contains(SubsetMask a) const {
  const State& s = *state_;
  if (!s.is_explicit) {
    if ((a.bits() & ~universe_bits(s.n)) != 0) return false;
    return s.oracle.contains(a);
  }
  if (s.n <= kScanLimit) {
    if ((a.bits() >> s.n) != 0) return false;
    return (s.dense[a.bits() >> 6] >> (a.bits() & 63)) & 1U;
  }
  return s.sparse.contains(a);
}

void Family::scan_members(const MemberVisitor& visit) const {
  const int n = state_->n;
  if (n > kScanLimit) throw ScaleError("scan enumeration limited to n <= " + std::to_string(kScanLimit));
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    if (contains(SubsetMask(bits))) visit(SubsetMask(bits));
  }
}

void Family::enumerate_structured(const MemberVisitor& visit) const {
  const State& s = *state_;
  if (s.is_explicit) {
    for (SubsetMask m : s.members) visit(m);
  } else if (s.oracle.enumerate) {
    s.oracle.enumerate(visit);
  } else {
    scan_members(visit);
  }
}

void Family::for_each_member(const MemberVisitor& visit) const {
  const State& s = *state_;
  if (s.is_explicit) {
    for (SubsetMask m : s.members) visit(m);
  } else if (s.n <= kScanLimit || !s.oracle.enumerate) {
    scan_members(visit);
  } else {
    s.oracle.enumerate(visit);
  }
}

std::vector<SubsetMask> Family::members() const {
  if (state_->is_explicit) return state_->members;
  std::vector<SubsetMask> out;
  for_each_member([&](SubsetMask m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::uint64_t Family::count() const {
  if (state_->is_explicit) return state_->members.size();
  std::uint64_t c = 0;
  for_each_member([&](SubsetMask) { ++c; });
  return c;
}

Family Family::materialize() const {
  if (state_->is_explicit) return *this;
  return from_members(state_->n, members(), state_->name);
}

const std::optional<BigInt>& Family::size_formula() const { return state_->oracle.size; }
const std::optional<int>& Family::rank_formula() const { return state_->oracle.rank; }

bool is_atomic(const Family& family) {
  if (!family.contains(SubsetMask())) return false;
  for (int e = 1; e <= family.ground_size(); ++e) {
    if (!family.contains(SubsetMask::singleton(e))) return false;
  }
  return true;
}

bool is_downward_closed(const Family& family) {
  bool closed = true;
  family.for_each_member([&](SubsetMask a) {
    if (!closed) return;
    a.for_each([&](int e) {
      if (closed && !family.contains(a.without(e))) closed = false;
    });
  });
  return closed;
}

int rank(const Family& family) {
  int best = -1;
  family.for_each_member([&](SubsetMask a) { best = std::max(best, a.cardinality()); });
  if (best < 0) throw std::domain_error("empty family");
  return best;
}

Family atomic_downward_closure(int n, const std::vector<SubsetMask>& generators) {
  std::unordered_set<SubsetMask> seen;
  std::vector<SubsetMask> stack;
  auto push = [&](SubsetMask m) {
    if (seen.insert(m).second) stack.push_back(m);
  };
  push(SubsetMask());
  for (int e = 1; e <= n; ++e) push(SubsetMask::singleton(e));
  for (SubsetMask g : generators) push(g);
  while (!stack.empty()) {
    SubsetMask m = stack.back();
    stack.pop_back();
    m.for_each([&](int e) { push(m.without(e)); });
  }
  return Family::from_members(n, {seen.begin(), seen.end()}, "closure");
}

}  // namespace exchange
