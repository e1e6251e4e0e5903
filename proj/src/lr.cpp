#include "schur/lr.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "schur/checked.hpp"
#include "schur/errors.hpp"

namespace schur {

namespace {

// Backtracking over the boxes in the reading order of the convention, so
// the ballot condition and the row/column comparisons only ever look at
// boxes that are already filled.
class LrSearch {
 public:
  LrSearch(const SkewShape& shape, const Partition& content, Convention conv,
           std::vector<Tableau>* collect)
      : shape_(shape), content_(content), conv_(conv), collect_(collect) {
    const int n = shape_.rank();
    const std::size_t width = static_cast<std::size_t>(shape_.outer().part(0));
    grid_.assign(static_cast<std::size_t>(n), std::vector<int>(width, 0));
    counts_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < n; ++r)
      for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) boxes_.emplace_back(r, c);
    if (conv_ == Convention::forward) {
      std::sort(boxes_.begin(), boxes_.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
      });
    } else {
      std::sort(boxes_.begin(), boxes_.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
    }
  }

  long long run() {
    fill(0);
    return count_;
  }

 private:
  bool box_in_shape(int r, int c) const {
    return r >= 0 && r < shape_.rank() && c >= shape_.row_begin(r) && c < shape_.row_end(r);
  }

  int at(int r, int c) const {
    return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  void fill(std::size_t k) {
    if (k == boxes_.size()) {
      ++count_;
      if (collect_) collect_->push_back(snapshot());
      return;
    }
    const auto [r, c] = boxes_[k];
    const int n = shape_.rank();
    for (int e = 1; e <= n; ++e) {
      auto& used = counts_[static_cast<std::size_t>(e)];
      if (used >= content_.part(e - 1)) continue;
      if (e > 1 && used >= counts_[static_cast<std::size_t>(e - 1)]) continue;
      if (conv_ == Convention::forward) {
        if (box_in_shape(r, c + 1) && e > at(r, c + 1)) continue;
        if (box_in_shape(r - 1, c) && e <= at(r - 1, c)) continue;
      } else {
        if (box_in_shape(r, c - 1) && e > at(r, c - 1)) continue;
        if (box_in_shape(r + 1, c) && e <= at(r + 1, c)) continue;
      }
      grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
      ++used;
      fill(k + 1);
      --used;
      grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
  }

  Tableau snapshot() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.rank()));
    for (int r = 0; r < shape_.rank(); ++r) {
      const auto& g = grid_[static_cast<std::size_t>(r)];
      rows[static_cast<std::size_t>(r)].assign(g.begin() + shape_.row_begin(r),
                                               g.begin() + shape_.row_end(r));
    }
    return Tableau(shape_, std::move(rows));
  }

  const SkewShape& shape_;
  const Partition& content_;
  Convention conv_;
  std::vector<Tableau>* collect_;
  std::vector<std::pair<int, int>> boxes_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
  long long count_ = 0;
};

// Row-major fill of a straight shape, summing one monomial per filling.
class SsytSum {
 public:
  explicit SsytSum(const Partition& shape) : shape_(shape), poly_(shape.rank()) {
    grid_.assign(static_cast<std::size_t>(shape.rank()),
                 std::vector<int>(static_cast<std::size_t>(shape.part(0)), 0));
    counts_.assign(static_cast<std::size_t>(shape.rank()) + 1, 0);
  }

  MonomialPoly run() {
    fill(0, 0);
    return std::move(poly_);
  }

 private:
  void fill(int r, int c) {
    const int n = shape_.rank();
    if (r == n) {
      poly_.add_term(std::vector<int>(counts_.begin() + 1, counts_.end()), 1);
      return;
    }
    if (c == shape_.part(r)) {
      fill(r + 1, 0);
      return;
    }
    auto& row = grid_[static_cast<std::size_t>(r)];
    for (int e = 1; e <= n; ++e) {
      if (c > 0 && e < row[static_cast<std::size_t>(c - 1)]) continue;
      if (r > 0 && e <= grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])
        continue;
      row[static_cast<std::size_t>(c)] = e;
      ++counts_[static_cast<std::size_t>(e)];
      fill(r, c + 1);
      --counts_[static_cast<std::size_t>(e)];
      row[static_cast<std::size_t>(c)] = 0;
    }
  }

  const Partition& shape_;
  MonomialPoly poly_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

}  // namespace

std::vector<Tableau> enumerate_lr(const SkewShape& shape, const Partition& content,
                                  Convention conv) {
  if (content.rank() != shape.rank())
    throw std::invalid_argument("content rank differs from shape rank");
  if (shape.box_count() != content.size()) return {};
  std::vector<Tableau> out;
  LrSearch(shape, content, conv, &out).run();
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.row_major_entries() < b.row_major_entries();
  });
  return out;
}

long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content, Convention conv) {
  if (outer.rank() != inner.rank() || outer.rank() != content.rank())
    throw std::invalid_argument("lr_coefficient arguments must share one rank");
  if (!contains(outer, inner)) return 0;
  if (outer.size() - inner.size() != content.size()) return 0;
  const SkewShape shape(outer, inner);
  return LrSearch(shape, content, conv, nullptr).run();
}

MonomialPoly::MonomialPoly(int nvars) : nvars_(nvars) {
  if (nvars <= 0) throw std::invalid_argument("variable count must be positive");
}

long long MonomialPoly::coefficient(const std::vector<int>& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

void MonomialPoly::add_term(const std::vector<int>& exponents, long long coeff) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("exponent vector length differs from variable count");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return;
  const auto it = terms_.try_emplace(exponents, 0).first;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable counts differ");
  MonomialPoly out(a.nvars());
  std::vector<int> exps(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = checked_add(ea[i], eb[i]);
      out.add_term(exps, checked_mul(ca, cb));
    }
  return out;
}

MonomialPoly schur_polynomial(const Partition& p) { return SsytSum(p).run(); }

MonomialPoly schur_polynomial_raw(std::vector<int> parts, int n) {
  for (int v : parts)
    if (v < 0) throw std::invalid_argument("negative part " + std::to_string(v));
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw NotWeaklyDecreasing("parts must be weakly decreasing");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > n) return MonomialPoly(n);
  return schur_polynomial(Partition(std::move(parts), n));
}

SchurExpansion::SchurExpansion(int rank) : rank_(rank) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
}

long long SchurExpansion::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& p, long long coeff) {
  if (p.rank() != rank_) throw std::invalid_argument("partition rank differs from expansion rank");
  if (coeff <= 0) throw std::invalid_argument("expansion coefficients must be positive");
  if (!terms_.empty() && terms_.begin()->first.size() != p.size())
    throw std::invalid_argument("expansion terms must share one size");
  terms_[p] += coeff;
}

SchurExpansion product_schur_expansion(const Partition& mu, const Partition& nu) {
  if (mu.rank() != nu.rank()) throw std::invalid_argument("rank mismatch");
  const int n = mu.rank();
  const MonomialPoly product = schur_polynomial(mu) * schur_polynomial(nu);
  std::map<std::vector<int>, long long> work(product.terms());
  SchurExpansion out(n);
  while (!work.empty()) {
    // Lexicographically greatest exponent vector; triangularity of the
    // Schur basis makes it a partition with a positive coefficient.
    const auto lead = work.rbegin();
    if (lead->second < 0)
      throw DecompositionFailure("negative leading coefficient in Schur elimination");
    for (std::size_t i = 0; i + 1 < lead->first.size(); ++i)
      if (lead->first[i] < lead->first[i + 1])
        throw DecompositionFailure("leading exponent vector is not weakly decreasing");
    const Partition shape(lead->first, n);
    const long long k = lead->second;
    const MonomialPoly basis = schur_polynomial(shape);
    for (const auto& [exps, c] : basis.terms()) {
      const auto it = work.try_emplace(exps, 0).first;
      it->second -= checked_mul(k, c);
      if (it->second < 0)
        throw DecompositionFailure("Schur elimination produced a negative coefficient");
      if (it->second == 0) work.erase(it);
    }
    out.add(shape, k);
  }
  return out;
}

}  // namespace schur
