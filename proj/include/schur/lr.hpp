#pragma once

#include <map>
#include <vector>

#include "schur/partition.hpp"
#include "schur/tableau.hpp"

namespace schur {

enum class Convention { forward, reverse };

/// All fillings of `shape` with the given content that are semistandard
/// and lattice under the chosen convention, sorted by row-major entry
/// sequence. Empty whenever the box count disagrees with the content
/// size.
std::vector<Tableau> enumerate_lr(const SkewShape& shape, const Partition& content,
                                  Convention conv);

/// The Littlewood-Richardson coefficient counted by tableau enumeration;
/// 0 when `inner` is not contained in `outer` or the sizes do not add up.
long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content, Convention conv = Convention::forward);

/// Sparse polynomial in n variables with exact integer coefficients,
/// keyed by exponent vector. Zero coefficients are never stored; the
/// zero polynomial has an empty term map.
class MonomialPoly {
 public:
  explicit MonomialPoly(int nvars);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const std::vector<int>& exponents) const;

  void add_term(const std::vector<int>& exponents, long long coeff);

  bool operator==(const MonomialPoly&) const = default;

 private:
  int nvars_;
  std::map<std::vector<int>, long long> terms_;
};

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);

/// Generating function of the semistandard tableaux of straight shape p
/// with entries at most n: one monomial per tableau content.
MonomialPoly schur_polynomial(const Partition& p);

/// Raw entry point that accepts parts lists with more than n nonzero
/// parts and returns the zero polynomial for them.
MonomialPoly schur_polynomial_raw(std::vector<int> parts, int n);

/// A polynomial written in the Schur basis: partition -> positive
/// coefficient, all keys of one rank and one size.
class SchurExpansion {
 public:
  explicit SchurExpansion(int rank);

  int rank() const { return rank_; }
  const std::map<Partition, long long>& terms() const { return terms_; }
  long long coefficient(const Partition& p) const;

  void add(const Partition& p, long long coeff);

  bool operator==(const SchurExpansion&) const = default;

 private:
  int rank_;
  std::map<Partition, long long> terms_;
};

/// Expands the monomial product of two Schur polynomials in the Schur
/// basis by repeated lexicographic leading-term elimination. Throws
/// DecompositionFailure if the elimination ever leaves the Schur cone;
/// that would be a bug, not an input error.
SchurExpansion product_schur_expansion(const Partition& mu, const Partition& nu);

}  // namespace schur
