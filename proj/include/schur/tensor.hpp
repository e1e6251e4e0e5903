#pragma once

#include <optional>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// Is the GL(n) tensor product for (lambda, mu) isomorphic to the one
/// for (nu, rho)? All four partitions share one rank.
struct TensorQuery {
  TensorQuery(Partition lambda, Partition mu, Partition nu, Partition rho);
  Partition lambda, mu, nu, rho;
};

/// Unordered pair of partitions, canonically stored lex-decreasing so
/// multiset equality is plain equality.
class SolutionPair {
 public:
  SolutionPair(Partition a, Partition b);
  const Partition& first() const { return first_; }
  const Partition& second() const { return second_; }
  auto operator<=>(const SolutionPair&) const = default;

 private:
  Partition first_;
  Partition second_;
};

/// Constant-time decision: the last parts sum equally and the reduced
/// partitions agree as multisets.
bool tensor_equal(const TensorQuery& q);

/// Every pair equivalent to {lambda, mu}: one candidate per split
/// a+b of the combined full columns and per assignment of the reduced
/// partitions, deduplicated and sorted. Always contains {lambda, mu}.
std::vector<SolutionPair> tensor_solutions(const Partition& lambda, const Partition& mu);

/// Monomial-level oracle: expands both products and compares term maps.
bool verify_theorem_bruteforce(const TensorQuery& q);

enum class TrivialityBound { guaranteed_trivial, nontrivial_possible };

/// guaranteed_trivial iff n > max{m, m'}.
TrivialityBound triviality_bound(long long m, long long m_prime, int n);

struct NontrivialWitness {
  Partition lambda;
  Partition mu;
  SolutionPair pair;
};

/// Exhaustive search in lex-decreasing order over lambda of size m, then
/// mu of size m': the first pair whose solution set has a non-trivial
/// entry, together with that entry.
std::optional<NontrivialWitness> find_nontrivial(long long m, long long m_prime, int n);

}  // namespace schur
