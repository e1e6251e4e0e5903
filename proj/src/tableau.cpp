#include "schur/tableau.hpp"

#include <string>

namespace schur {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.rank();
  if (static_cast<int>(rows_.size()) != n)
    throw std::invalid_argument("tableau needs one row list per shape row");
  for (int r = 0; r < n; ++r) {
    const auto expected = static_cast<std::size_t>(shape_.row_end(r) - shape_.row_begin(r));
    if (rows_[static_cast<std::size_t>(r)].size() != expected)
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has the wrong box count");
    for (int e : rows_[static_cast<std::size_t>(r)])
      if (e < 1 || e > n)
        throw std::invalid_argument("entry " + std::to_string(e) + " outside 1.." +
                                    std::to_string(n));
  }
}

int Tableau::entry(int r, int c) const {
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape_.row_begin(r))];
}

std::vector<int> Tableau::row_major_entries() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(box_count()));
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> counts(static_cast<std::size_t>(t.shape().rank()), 0);
  for (const auto& row : t.rows())
    for (int e : row) ++counts[static_cast<std::size_t>(e - 1)];
  return counts;
}

namespace {

bool box_at(const SkewShape& s, int r, int c) {
  return r >= 0 && r < s.rank() && c >= s.row_begin(r) && c < s.row_end(r);
}

bool lattice_ok(const Tableau& t, bool reverse) {
  const int n = t.shape().rank();
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  auto read = [&](int e) {
    ++counts[static_cast<std::size_t>(e)];
    return e == 1 ||
           counts[static_cast<std::size_t>(e)] <= counts[static_cast<std::size_t>(e - 1)];
  };
  if (!reverse) {
    for (int r = 0; r < n; ++r)
      for (int c = t.shape().row_end(r) - 1; c >= t.shape().row_begin(r); --c)
        if (!read(t.entry(r, c))) return false;
  } else {
    for (int r = n - 1; r >= 0; --r)
      for (int c = t.shape().row_begin(r); c < t.shape().row_end(r); ++c)
        if (!read(t.entry(r, c))) return false;
  }
  return true;
}

}  // namespace

bool is_semistandard(const Tableau& t) {
  const SkewShape& s = t.shape();
  for (int r = 0; r < s.rank(); ++r)
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) {
      if (box_at(s, r, c + 1) && t.entry(r, c) > t.entry(r, c + 1)) return false;
      if (box_at(s, r + 1, c) && t.entry(r + 1, c) <= t.entry(r, c)) return false;
    }
  return true;
}

bool is_semistandard_reverse(const Tableau& t) {
  const SkewShape& s = t.shape();
  for (int r = 0; r < s.rank(); ++r)
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) {
      if (box_at(s, r, c + 1) && t.entry(r, c) < t.entry(r, c + 1)) return false;
      if (box_at(s, r + 1, c) && t.entry(r + 1, c) >= t.entry(r, c)) return false;
    }
  return true;
}

bool is_lattice_forward(const Tableau& t) { return lattice_ok(t, false); }

bool is_lattice_reverse(const Tableau& t) { return lattice_ok(t, true); }

}  // namespace schur
