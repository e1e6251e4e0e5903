#include "schur/cut_poset.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "schur/checked.hpp"
#include "schur/errors.hpp"
#include "schur/lr.hpp"

namespace schur {

namespace {

void check_cut_args(const Partition& lambda, const Partition& mu, int s) {
  if (lambda.rank() != mu.rank())
    throw std::invalid_argument("rank mismatch between the two partitions");
  if (s < 0 || s >= lambda.rank())
    throw SOutOfRange("s must lie in 0.." + std::to_string(lambda.rank() - 1) + ", got " +
                      std::to_string(s));
}

}  // namespace

Partition s_cut(const Partition& lambda, const Partition& mu, int s) {
  check_cut_args(lambda, mu, s);
  const int n = lambda.rank();
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < s; ++i) values.push_back(checked_add(lambda.part(i), mu.part(i)));
  for (int j = 1; j <= n - s; ++j)
    values.push_back(checked_add(lambda.part(s + j - 1), mu.part(n - j)));
  return sort_into_partition(std::move(values), n);
}

Tableau s_cut_witness(const Partition& lambda, const Partition& mu, int s) {
  check_cut_args(lambda, mu, s);
  const int n = lambda.rank();
  const Partition kappa = s_cut(lambda, mu, s);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < s; ++i)
    rows[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(kappa.part(i) - lambda.part(i)), i + 1);

  // The shape below the cut, treated as its own diagram of rank n - s.
  const int ns = n - s;
  const Partition gamma(std::vector<int>(kappa.parts().begin() + s, kappa.parts().end()), ns);
  const Partition alpha(std::vector<int>(lambda.parts().begin() + s, lambda.parts().end()), ns);
  const int width = gamma.part(0);
  std::vector<std::vector<int>> sub(static_cast<std::size_t>(ns));
  for (int r = 0; r < ns; ++r)
    sub[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(gamma.part(r) - alpha.part(r)), 0);
  auto box_at = [&](int r, int c) { return r >= 0 && alpha.part(r) <= c && c < gamma.part(r); };
  std::vector<int> bottom(static_cast<std::size_t>(width), -1);
  for (int c = 0; c < width; ++c)
    for (int r = 0; r < ns; ++r)
      if (box_at(r, c)) bottom[static_cast<std::size_t>(c)] = r;
  for (int v = 1; v <= ns; ++v) {
    int needed = mu.part(s + v - 1);
    for (int c = 0; c < width && needed > 0; ++c) {
      const int r = bottom[static_cast<std::size_t>(c)];
      if (r < 0) continue;
      sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - alpha.part(r))] = v;
      bottom[static_cast<std::size_t>(c)] = box_at(r - 1, c) ? r - 1 : -1;
      --needed;
    }
    if (needed > 0) throw std::logic_error("s_cut_witness: filling ran out of columns");
  }
  for (int r = 0; r < ns; ++r) {
    auto& dest = rows[static_cast<std::size_t>(s + r)];
    dest.resize(sub[static_cast<std::size_t>(r)].size());
    for (std::size_t i = 0; i < dest.size(); ++i)
      dest[i] = sub[static_cast<std::size_t>(r)][i] + s;
  }
  return Tableau(SkewShape(kappa, lambda), std::move(rows));
}

bool verify_witness_hybrid(const Tableau& witness, const Partition& lambda, const Partition& mu,
                           int s) {
  check_cut_args(lambda, mu, s);
  const int n = lambda.rank();
  const Partition kappa = s_cut(lambda, mu, s);
  if (witness.shape() != SkewShape(kappa, lambda)) return false;
  if (content(witness) != mu.parts()) return false;
  for (int i = 0; i < s; ++i) {
    const auto& row = witness.rows()[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != mu.part(i)) return false;
    for (int e : row)
      if (e != i + 1) return false;
  }
  const int ns = n - s;
  std::vector<std::vector<int>> sub_rows(static_cast<std::size_t>(ns));
  for (int r = 0; r < ns; ++r) {
    const auto& row = witness.rows()[static_cast<std::size_t>(s + r)];
    sub_rows[static_cast<std::size_t>(r)].reserve(row.size());
    for (int e : row) {
      if (e <= s) return false;
      sub_rows[static_cast<std::size_t>(r)].push_back(e - s);
    }
  }
  const Tableau sub(
      SkewShape(Partition(std::vector<int>(kappa.parts().begin() + s, kappa.parts().end()), ns),
                Partition(std::vector<int>(lambda.parts().begin() + s, lambda.parts().end()), ns)),
      std::move(sub_rows));
  return is_semistandard_reverse(sub) && is_lattice_reverse(sub);
}

SPoset s_poset(const Partition& lambda, const Partition& mu, int s) {
  check_cut_args(lambda, mu, s);
  const int n = lambda.rank();
  const long long total = lambda.size() + mu.size();
  std::vector<int> acc(static_cast<std::size_t>(n), 0);
  long long prefix_sum = 0;
  for (int i = 0; i < s; ++i) {
    acc[static_cast<std::size_t>(i)] = checked_add(lambda.part(i), mu.part(i));
    prefix_sum += acc[static_cast<std::size_t>(i)];
  }
  std::vector<Partition> members;
  auto rec = [&](auto&& self, int pos, int prev, long long remaining) -> void {
    if (pos == n) {
      if (remaining != 0) return;
      Partition kappa(acc, n);
      if (lr_coefficient(kappa, lambda, mu) > 0) members.push_back(std::move(kappa));
      return;
    }
    const int slots = n - pos;
    const long long lo = (remaining + slots - 1) / slots;
    const long long hi = std::min<long long>(prev, remaining);
    for (long long p = hi; p >= lo; --p) {
      acc[static_cast<std::size_t>(pos)] = static_cast<int>(p);
      self(self, pos + 1, static_cast<int>(p), remaining - p);
    }
  };
  const int first_cap =
      s > 0 ? acc[static_cast<std::size_t>(s - 1)] : std::numeric_limits<int>::max();
  rec(rec, s, first_cap, total - prefix_sum);
  std::sort(members.begin(), members.end());
  return SPoset{lambda, mu, s, std::move(members)};
}

Partition min_of_s_poset(const Partition& lambda, const Partition& mu, int s) {
  SPoset poset = s_poset(lambda, mu, s);
  if (poset.members.empty())
    throw std::logic_error("s-poset came out empty; the s-cut always belongs to it");
  return poset.members.front();
}

}  // namespace schur
