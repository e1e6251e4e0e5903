#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schur/sweeps.hpp"
#include "schur/tensor.hpp"

using namespace schur;

namespace {
Partition P(std::vector<int> parts, int n) { return make_partition(std::move(parts), n); }
}  // namespace

TEST_CASE("tensor_equal") {
  CHECK(tensor_equal(TensorQuery(P({5, 3, 2}, 3), P({2, 2}, 3), P({4, 2, 1}, 3), P({3, 3, 1}, 3))));
  CHECK(tensor_equal(TensorQuery(P({3, 1}, 3), P({2, 1, 1}, 3), P({2, 1, 1}, 3), P({3, 1}, 3))));
  CHECK_FALSE(tensor_equal(TensorQuery(P({3, 1}, 3), P({1, 1}, 3), P({2, 2}, 3), P({2}, 3))));
  CHECK_THROWS_AS(TensorQuery(P({1}, 1), P({1}, 2), P({1}, 2), P({1}, 2)), std::invalid_argument);
}

TEST_CASE("tensor_equal symmetry") {
  const Partition a = P({5, 3, 2}, 3), b = P({2, 2}, 3), c = P({4, 2, 1}, 3),
                  d = P({3, 3, 1}, 3);
  CHECK(tensor_equal(TensorQuery(a, b, c, d)) == tensor_equal(TensorQuery(c, d, a, b)));
  CHECK(tensor_equal(TensorQuery(a, b, c, d)) == tensor_equal(TensorQuery(b, a, d, c)));
}

TEST_CASE("tensor_solutions") {
  const auto sols = tensor_solutions(P({5, 3, 2}, 3), P({2, 2}, 3));
  const std::vector<SolutionPair> expected = {
      SolutionPair(P({4, 2, 1}, 3), P({3, 3, 1}, 3)),
      SolutionPair(P({4, 4, 2}, 3), P({3, 1}, 3)),
      SolutionPair(P({5, 3, 2}, 3), P({2, 2}, 3)),
  };
  CHECK(sols == expected);
  for (const SolutionPair& pr : sols)
    CHECK(verify_theorem_bruteforce(
        TensorQuery(P({5, 3, 2}, 3), P({2, 2}, 3), pr.first(), pr.second())));

  // no full columns on either side: only the trivial pair
  CHECK(tensor_solutions(P({2, 1}, 3), P({1}, 3)) ==
        std::vector<SolutionPair>{SolutionPair(P({2, 1}, 3), P({1}, 3))});

  CHECK(tensor_solutions(P({1, 1}, 2), P({1, 1}, 2)) ==
        std::vector<SolutionPair>{SolutionPair(P({1, 1}, 2), P({1, 1}, 2)),
                                  SolutionPair(P({2, 2}, 2), P({}, 2))});
}

TEST_CASE("every solution pair passes the oracle and conserves size") {
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 4; ++a)
      for (const Partition& lam : partitions_of(a, n))
        for (int b = 0; b <= 4; ++b)
          for (const Partition& mu : partitions_of(b, n)) {
            const auto sols = tensor_solutions(lam, mu);
            CHECK(std::find(sols.begin(), sols.end(), SolutionPair(lam, mu)) != sols.end());
            for (const SolutionPair& pr : sols) {
              CHECK(pr.first().size() + pr.second().size() == lam.size() + mu.size());
              CHECK(verify_theorem_bruteforce(TensorQuery(lam, mu, pr.first(), pr.second())));
            }
          }
}

TEST_CASE("verify_theorem_bruteforce") {
  CHECK(verify_theorem_bruteforce(
      TensorQuery(P({5, 3, 2}, 3), P({2, 2}, 3), P({4, 2, 1}, 3), P({3, 3, 1}, 3))));
  CHECK(verify_theorem_bruteforce(TensorQuery(P({3, 1}, 2), P({2}, 2), P({2}, 2), P({3, 1}, 2))));
  CHECK_FALSE(
      verify_theorem_bruteforce(TensorQuery(P({3, 1}, 3), P({1, 1}, 3), P({2, 2}, 3), P({2}, 3))));
}

TEST_CASE("triviality_bound") {
  CHECK(triviality_bound(4, 3, 5) == TrivialityBound::guaranteed_trivial);
  CHECK(triviality_bound(0, 0, 1) == TrivialityBound::guaranteed_trivial);
  CHECK(triviality_bound(2, 4, 4) == TrivialityBound::nontrivial_possible);
}

TEST_CASE("find_nontrivial") {
  const auto w = find_nontrivial(5, 4, 3);
  REQUIRE(w.has_value());
  CHECK(SolutionPair(w->lambda, w->mu) != w->pair);
  CHECK(verify_theorem_bruteforce(TensorQuery(w->lambda, w->mu, w->pair.first(), w->pair.second())));

  CHECK_FALSE(find_nontrivial(2, 2, 3).has_value());

  // first witness in the fixed lex-decreasing search order at m = m' = n = 2
  const auto small = find_nontrivial(2, 2, 2);
  REQUIRE(small.has_value());
  CHECK(small->lambda == P({2}, 2));
  CHECK(small->mu == P({1, 1}, 2));
  CHECK(small->pair == SolutionPair(P({3, 1}, 2), P({}, 2)));
  // and {22, 00} solves for lambda = mu = 11
  const auto sols = tensor_solutions(P({1, 1}, 2), P({1, 1}, 2));
  CHECK(std::find(sols.begin(), sols.end(), SolutionPair(P({2, 2}, 2), P({}, 2))) != sols.end());
}

TEST_CASE("solutions are unique once n beats both sizes") {
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a < n && a <= 3; ++a)
      for (int b = 0; b < n && b <= 3; ++b)
        for (const Partition& lam : partitions_of(a, n))
          for (const Partition& mu : partitions_of(b, n))
            CHECK(tensor_solutions(lam, mu).size() == 1);
}

TEST_CASE("theorem sweep, small bounds") {
  const SweepResult r = sweep_theorem(6, 3);
  CHECK(r.checked > 0);
  CHECK(r.failed == 0);
}
