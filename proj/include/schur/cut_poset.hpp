#pragma once

#include <vector>

#include "schur/partition.hpp"
#include "schur/tableau.hpp"

namespace schur {

/// The s-cut of lambda and mu: the first s rows added index-wise, the
/// remaining rows of mu rotated half a turn against the remaining rows
/// of lambda, everything sorted weakly decreasing. Throws SOutOfRange
/// unless 0 <= s <= n-1.
Partition s_cut(const Partition& lambda, const Partition& mu, int s);

/// The explicit filling of shape cut/lambda with content mu witnessing
/// that the cut carries a positive coefficient: rows 1..s forced to
/// their row index, the shape below the cut filled bottom-of-column
/// first, left to right, one value per pass.
Tableau s_cut_witness(const Partition& lambda, const Partition& mu, int s);

/// The witness contract: forced prefix rows, content mu, and the
/// sub-tableau below the cut (entries shifted down by s) semistandard
/// and lattice under the reverse convention.
bool verify_witness_hybrid(const Tableau& witness, const Partition& lambda,
                           const Partition& mu, int s);

/// All kappa with a positive coefficient against (lambda, mu) whose
/// first s parts are the forced index-wise sums, sorted lex-increasing.
struct SPoset {
  Partition lambda;
  Partition mu;
  int s;
  std::vector<Partition> members;
};

SPoset s_poset(const Partition& lambda, const Partition& mu, int s);

/// Lex-least member of the s-poset, computed from the enumeration and
/// not from the cut construction; agreement with s_cut is a test target,
/// not an assumption.
Partition min_of_s_poset(const Partition& lambda, const Partition& mu, int s);

}  // namespace schur
