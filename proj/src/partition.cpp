#include "schur/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "schur/checked.hpp"

namespace schur {

namespace {

void check_rank(int n) {
  if (n <= 0) throw std::invalid_argument("rank must be positive, got " + std::to_string(n));
}

void check_nonnegative(const std::vector<int>& values) {
  for (int v : values)
    if (v < 0) throw std::invalid_argument("negative part " + std::to_string(v));
}

void require_same_rank(const Partition& a, const Partition& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
}

}  // namespace

Partition::Partition(std::vector<int> raw, int n) {
  check_rank(n);
  check_nonnegative(raw);
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i] < raw[i + 1])
      throw NotWeaklyDecreasing("part " + std::to_string(raw[i]) + " precedes larger part " +
                                std::to_string(raw[i + 1]));
  std::size_t nonzero = 0;
  while (nonzero < raw.size() && raw[nonzero] > 0) ++nonzero;
  if (nonzero > static_cast<std::size_t>(n))
    throw TooManyParts(std::to_string(nonzero) + " nonzero parts exceed rank " +
                       std::to_string(n));
  raw.resize(static_cast<std::size_t>(n), 0);
  parts_ = std::move(raw);
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition make_partition(std::vector<int> raw, int n) { return Partition(std::move(raw), n); }

Partition sort_into_partition(std::vector<int> values, int n) {
  check_nonnegative(values);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values), n);
}

Partition zero_partition(int n) { return Partition({}, n); }

Partition lambda_minus(const Partition& p) {
  std::vector<int> v = p.parts();
  const int d = v.back();
  for (int& x : v) x -= d;
  return Partition(std::move(v), p.rank());
}

Partition lambda_minus_minus(const Partition& p) {
  Partition reduced = lambda_minus(p);
  const int n = p.rank();
  if (n == 1) return reduced;
  std::vector<int> v = reduced.parts();
  const int d = v[static_cast<std::size_t>(n - 2)];
  for (int i = 0; i < n - 1; ++i) v[static_cast<std::size_t>(i)] -= d;
  return Partition(std::move(v), n);
}

bool contains(const Partition& outer, const Partition& inner) {
  require_same_rank(outer, inner);
  for (int i = 0; i < outer.rank(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  require_same_rank(a, b);
  return a.parts() <=> b.parts();
}

Partition add_full_columns(const Partition& p, int k) {
  if (k < 0) throw std::invalid_argument("column count must be non-negative");
  std::vector<int> v = p.parts();
  for (int& x : v) x = checked_add(x, k);
  return Partition(std::move(v), p.rank());
}

std::vector<Partition> partitions_of(long long m, int n) {
  check_rank(n);
  if (m < 0) throw std::invalid_argument("partition size must be non-negative");
  if (m > std::numeric_limits<int>::max())
    throw std::invalid_argument("partition size too large");
  std::vector<Partition> out;
  std::vector<int> acc(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int prev, long long remaining) -> void {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(acc, n);
      return;
    }
    const int slots = n - pos;
    const long long lo = (remaining + slots - 1) / slots;
    const long long hi = std::min<long long>(prev, remaining);
    for (long long p = hi; p >= lo; --p) {
      acc[static_cast<std::size_t>(pos)] = static_cast<int>(p);
      self(self, pos + 1, static_cast<int>(p), remaining - p);
    }
  };
  rec(rec, 0, static_cast<int>(m), m);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  require_same_rank(outer_, inner_);
  if (!contains(outer_, inner_))
    throw std::invalid_argument("inner partition is not a subdiagram of the outer one");
}

}  // namespace schur
