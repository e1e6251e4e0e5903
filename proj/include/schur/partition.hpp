#pragma once

#include <compare>
#include <vector>

#include "schur/errors.hpp"

namespace schur {

/// A partition materialized to exactly n weakly decreasing non-negative
/// parts. The ambient rank n is part of the value and trailing zeros are
/// stored explicitly, so the last part and multiset comparisons are O(1)
/// to reason about. Immutable once constructed.
class Partition {
 public:
  /// Pads `raw` with zeros to exactly n parts. Throws NotWeaklyDecreasing
  /// if the input is out of order and TooManyParts if more than n parts
  /// are nonzero.
  Partition(std::vector<int> raw, int n);

  int rank() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int last_part() const { return parts_.back(); }
  long long size() const;
  bool is_zero() const { return size() == 0; }

  // Lexicographic; a total order on partitions of a fixed rank.
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::vector<int> raw, int n);

/// Sorts arbitrary non-negative values weakly decreasing before
/// materializing, for callers that assemble the parts as a multiset.
Partition sort_into_partition(std::vector<int> values, int n);

Partition zero_partition(int n);

/// Removes every column of full height n, i.e. subtracts the last part
/// from all parts.
Partition lambda_minus(const Partition& p);

/// lambda_minus, then the columns of height n-1 stripped as well.
Partition lambda_minus_minus(const Partition& p);

/// Is `inner` a subdiagram of `outer`?
bool contains(const Partition& outer, const Partition& inner);

std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// p with k extra full columns: k added to every part.
Partition add_full_columns(const Partition& p, int k);

/// All partitions of m with at most n parts, materialized at rank n, in
/// lex-decreasing order.
std::vector<Partition> partitions_of(long long m, int n);

/// The boxes of `outer` not in `inner`, for nested partitions of equal
/// rank. Row r spans columns row_begin(r)..row_end(r)-1.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rank() const { return outer_.rank(); }
  long long box_count() const { return outer_.size() - inner_.size(); }
  int row_begin(int r) const { return inner_.part(r); }
  int row_end(int r) const { return outer_.part(r); }

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace schur
