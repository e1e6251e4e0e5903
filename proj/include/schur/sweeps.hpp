#pragma once

#include <string>
#include <vector>

namespace schur {

/// Outcome of one exhaustive property sweep.
struct SweepResult {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> notes;  // first few failure descriptions
  bool ok() const { return failed == 0; }
};

/// The forward and reverse reading conventions count the same
/// coefficients: all lambda of size <= max_size and all (mu, nu) with
/// matching sizes, at ranks 1..max_n.
SweepResult sweep_convention_equivalence(int max_size, int max_n);

/// product_schur_expansion(mu, nu) matches the tableau count for every
/// partition of the right size; |mu|, |nu| <= max_each_size.
SweepResult sweep_oracle_equivalence(int max_each_size, int max_n);

/// s-cut symmetry, size conservation, poset membership, strict
/// lex-minimality and witness validity over |lambda|+|mu| <=
/// max_pair_size, all s.
SweepResult sweep_cut_poset(int max_pair_size, int max_n);

/// tensor_equal agrees with the monomial oracle on every matched-size
/// quadruple with |lambda|+|mu| = |nu|+|rho| <= max_side_size.
SweepResult sweep_theorem(int max_side_size, int max_n);

struct SnnSweepResult {
  SweepResult base;
  long long certificates = 0;
  long long inconclusive_negative = 0;
  std::string inconclusive_negative_example;
};

/// Every certificate is confirmed by verify_certificate and by the
/// Schur-basis difference; also counts quadruples where the lex test is
/// inconclusive yet the difference genuinely fails Schur non-negativity.
SnnSweepResult sweep_snn_soundness(int max_side_size, int max_n);

/// Both halves of the triviality bound: no nontrivial pairs once
/// n > max{m, m'}, and a confirmed witness whenever min{m, m'} >= 2 and
/// n <= max{m, m'} <= max_size.
SweepResult sweep_triviality_bound(int max_size);

}  // namespace schur
