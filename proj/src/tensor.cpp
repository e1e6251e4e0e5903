#include "schur/tensor.hpp"

#include <algorithm>
#include <set>

#include "schur/lr.hpp"

namespace schur {

TensorQuery::TensorQuery(Partition l, Partition m, Partition nn, Partition r)
    : lambda(std::move(l)), mu(std::move(m)), nu(std::move(nn)), rho(std::move(r)) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank() || lambda.rank() != rho.rank())
    throw std::invalid_argument("tensor query partitions must share one rank");
}

SolutionPair::SolutionPair(Partition a, Partition b)
    : first_(std::move(a)), second_(std::move(b)) {
  if (first_.rank() != second_.rank()) throw std::invalid_argument("pair ranks differ");
  if (first_ < second_) std::swap(first_, second_);
}

bool tensor_equal(const TensorQuery& q) {
  if (q.lambda.last_part() + q.mu.last_part() != q.nu.last_part() + q.rho.last_part())
    return false;
  return SolutionPair(lambda_minus(q.lambda), lambda_minus(q.mu)) ==
         SolutionPair(lambda_minus(q.nu), lambda_minus(q.rho));
}

std::vector<SolutionPair> tensor_solutions(const Partition& lambda, const Partition& mu) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("rank mismatch");
  const int total = lambda.last_part() + mu.last_part();
  const Partition lm = lambda_minus(lambda);
  const Partition mm = lambda_minus(mu);
  std::set<SolutionPair> pairs;
  for (int a = 0; a <= total; ++a) {
    const int b = total - a;
    pairs.insert(SolutionPair(add_full_columns(lm, a), add_full_columns(mm, b)));
    pairs.insert(SolutionPair(add_full_columns(mm, a), add_full_columns(lm, b)));
  }
  return {pairs.begin(), pairs.end()};
}

bool verify_theorem_bruteforce(const TensorQuery& q) {
  return schur_polynomial(q.lambda) * schur_polynomial(q.mu) ==
         schur_polynomial(q.nu) * schur_polynomial(q.rho);
}

TrivialityBound triviality_bound(long long m, long long m_prime, int n) {
  return n > std::max(m, m_prime) ? TrivialityBound::guaranteed_trivial
                                  : TrivialityBound::nontrivial_possible;
}

std::optional<NontrivialWitness> find_nontrivial(long long m, long long m_prime, int n) {
  for (const Partition& lambda : partitions_of(m, n))
    for (const Partition& mu : partitions_of(m_prime, n)) {
      const SolutionPair trivial(lambda, mu);
      for (const SolutionPair& pair : tensor_solutions(lambda, mu))
        if (pair != trivial) return NontrivialWitness{lambda, mu, pair};
    }
  return std::nullopt;
}

}  // namespace schur
