#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/cut_poset.hpp"
#include "schur/lr.hpp"
#include "schur/sweeps.hpp"

using namespace schur;

namespace {
Partition P(std::vector<int> parts, int n) { return make_partition(std::move(parts), n); }
}  // namespace

TEST_CASE("s_cut") {
  CHECK(s_cut(P({4, 3, 2, 1, 1}, 6), P({5, 4, 3, 2}, 6), 2) == P({9, 7, 3, 3, 2, 1}, 6));
  const Partition lam = P({3, 1}, 3);
  for (int s = 0; s < 3; ++s) CHECK(s_cut(lam, P({}, 3), s) == lam);
  CHECK(s_cut(P({3, 1}, 3), P({1, 1}, 3), 0) == P({3, 2, 1}, 3));
  CHECK(s_cut(P({2, 2}, 3), P({2}, 3), 0) == P({2, 2, 2}, 3));
  CHECK(s_cut(P({2, 1}, 3), P({2, 1}, 3), 0) == P({2, 2, 2}, 3));
  CHECK_THROWS_AS(s_cut(lam, lam, -1), SOutOfRange);
  CHECK_THROWS_AS(s_cut(lam, lam, 3), SOutOfRange);
}

TEST_CASE("s_cut_witness") {
  // 0-cut of 21 and 21 at n=3 is 222; the prescribed filling is reverse-valid
  const Partition lam = P({2, 1}, 3);
  const Tableau w = s_cut_witness(lam, lam, 0);
  CHECK(w.shape() == SkewShape(P({2, 2, 2}, 3), lam));
  CHECK(content(w) == lam.parts());
  CHECK(verify_witness_hybrid(w, lam, lam, 0));
  // with s = 0 the sub-tableau is the whole filling
  CHECK(is_semistandard_reverse(w));
  CHECK(is_lattice_reverse(w));

  const Tableau empty = s_cut_witness(lam, P({}, 3), 1);
  CHECK(empty.box_count() == 0);
  CHECK(verify_witness_hybrid(empty, lam, P({}, 3), 1));

  const Partition big_l = P({4, 3, 2, 1, 1}, 6);
  const Partition big_m = P({5, 4, 3, 2}, 6);
  const Tableau big = s_cut_witness(big_l, big_m, 2);
  CHECK(big.shape() == SkewShape(P({9, 7, 3, 3, 2, 1}, 6), big_l));
  CHECK(content(big) == big_m.parts());
  CHECK(verify_witness_hybrid(big, big_l, big_m, 2));

  CHECK_THROWS_AS(s_cut_witness(lam, lam, 7), SOutOfRange);
}

TEST_CASE("verify_witness_hybrid rejects a wrong filling") {
  const Partition lam = P({2, 1}, 3);
  // right shape and content but the entries moved around: the reverse
  // convention wants columns strictly increasing bottom to top
  const Tableau bad(SkewShape(P({2, 2, 2}, 3), lam), {{}, {1}, {1, 2}});
  const Tableau good = s_cut_witness(lam, lam, 0);
  CHECK(good.rows() != bad.rows());
  CHECK_FALSE(is_semistandard_reverse(bad));
  CHECK_FALSE(verify_witness_hybrid(bad, lam, lam, 0));
  // wrong content is rejected even when the shape matches
  const Tableau wrong_content(SkewShape(P({2, 2, 2}, 3), lam), {{}, {3}, {1, 1}});
  CHECK_FALSE(verify_witness_hybrid(wrong_content, lam, lam, 0));
}

TEST_CASE("s_poset") {
  const Partition lam = P({2, 1}, 3);
  const SPoset poset = s_poset(lam, lam, 0);
  const std::vector<Partition> expected = {P({2, 2, 2}, 3), P({3, 2, 1}, 3), P({3, 3}, 3),
                                           P({4, 1, 1}, 3), P({4, 2}, 3)};
  CHECK(poset.members == expected);

  // membership agrees with the polynomial oracle
  const SchurExpansion oracle = product_schur_expansion(lam, lam);
  CHECK(poset.members.size() == oracle.terms().size());
  for (const Partition& k : poset.members) CHECK(oracle.coefficient(k) > 0);

  CHECK(s_poset(P({3, 1}, 3), P({}, 3), 1).members == std::vector<Partition>{P({3, 1}, 3)});
  CHECK_THROWS_AS(s_poset(lam, lam, 3), SOutOfRange);
}

TEST_CASE("s_poset honors the forced prefix") {
  const Partition lam = P({3, 1}, 3);
  const Partition mu = P({2, 2}, 3);
  for (int s = 0; s < 3; ++s)
    for (const Partition& k : s_poset(lam, mu, s).members) {
      for (int i = 0; i < s; ++i) CHECK(k.part(i) == lam.part(i) + mu.part(i));
      CHECK(lr_coefficient(k, lam, mu) > 0);
    }
}

TEST_CASE("min_of_s_poset") {
  const Partition lam = P({2, 1}, 3);
  CHECK(min_of_s_poset(lam, lam, 0) == P({2, 2, 2}, 3));
  CHECK(min_of_s_poset(lam, lam, 0) == s_cut(lam, lam, 0));
  const Partition straight = P({3, 1}, 3);
  for (int s = 0; s < 3; ++s) CHECK(min_of_s_poset(straight, P({}, 3), s) == straight);
}

TEST_CASE("cut-poset sweep, small bounds") {
  const SweepResult r = sweep_cut_poset(8, 3);
  CHECK(r.checked > 0);
  CHECK(r.failed == 0);
}
