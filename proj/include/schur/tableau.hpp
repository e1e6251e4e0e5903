#pragma once

#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// A filling of a skew shape by integers in 1..n, stored row by row
/// (row r holds the entries of columns row_begin(r)..row_end(r)-1).
class Tableau {
 public:
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int r, int c) const;  // c is the absolute column index
  long long box_count() const { return shape_.box_count(); }
  std::vector<int> row_major_entries() const;

  bool operator==(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// c(T): how many times each of 1..n occurs.
std::vector<int> content(const Tableau& t);

/// Rows weakly increase left to right, columns strictly increase top to
/// bottom.
bool is_semistandard(const Tableau& t);

/// Rows weakly increase right to left, columns strictly increase bottom
/// to top.
bool is_semistandard_reverse(const Tableau& t);

/// Ballot condition, reading right to left and top to bottom: every
/// prefix holds at least as many i s as (i+1) s.
bool is_lattice_forward(const Tableau& t);

/// Ballot condition, reading left to right and bottom to top.
bool is_lattice_reverse(const Tableau& t);

}  // namespace schur
