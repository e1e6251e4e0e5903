#include "schur/sweeps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "schur/cut_poset.hpp"
#include "schur/io.hpp"
#include "schur/lr.hpp"
#include "schur/partition.hpp"
#include "schur/schur_nonneg.hpp"
#include "schur/tensor.hpp"

namespace schur {

namespace {

constexpr std::size_t kMaxNotes = 5;

void note_failure(SweepResult& r, std::string text) {
  ++r.failed;
  if (r.notes.size() < kMaxNotes) r.notes.push_back(std::move(text));
}

std::vector<Partition> partitions_up_to(int max_size, int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m)
    for (Partition& p : partitions_of(m, n)) out.push_back(std::move(p));
  return out;
}

std::string poly_key(const MonomialPoly& p) {
  std::ostringstream os;
  for (const auto& [exps, coeff] : p.terms()) {
    for (int e : exps) os << e << ',';
    os << ':' << coeff << ';';
  }
  return os.str();
}

}  // namespace

SweepResult sweep_convention_equivalence(int max_size, int max_n) {
  SweepResult r;
  r.name = "convention-equivalence";
  for (int n = 1; n <= max_n; ++n) {
    const auto all = partitions_up_to(max_size, n);
    for (const Partition& lambda : all)
      for (const Partition& mu : all) {
        const long long rest = lambda.size() - mu.size();
        if (rest < 0) continue;
        for (const Partition& nu : partitions_of(rest, n)) {
          ++r.checked;
          const long long fwd = lr_coefficient(lambda, mu, nu, Convention::forward);
          const long long rev = lr_coefficient(lambda, mu, nu, Convention::reverse);
          if (fwd != rev)
            note_failure(r, "c^" + format_partition(lambda) + "_(" + format_partition(mu) +
                                ";" + format_partition(nu) + "): forward " +
                                std::to_string(fwd) + " vs reverse " + std::to_string(rev));
        }
      }
  }
  return r;
}

SweepResult sweep_oracle_equivalence(int max_each_size, int max_n) {
  SweepResult r;
  r.name = "oracle-equivalence";
  for (int n = 1; n <= max_n; ++n) {
    const auto all = partitions_up_to(max_each_size, n);
    for (const Partition& mu : all)
      for (const Partition& nu : all) {
        ++r.checked;
        const SchurExpansion expansion = product_schur_expansion(mu, nu);
        for (const Partition& lambda : partitions_of(mu.size() + nu.size(), n))
          if (expansion.coefficient(lambda) != lr_coefficient(lambda, mu, nu)) {
            note_failure(r, "s_" + format_partition(mu) + " * s_" + format_partition(nu) +
                                " disagrees with the tableau count at " +
                                format_partition(lambda));
            break;
          }
      }
  }
  return r;
}

SweepResult sweep_cut_poset(int max_pair_size, int max_n) {
  SweepResult r;
  r.name = "cut-poset";
  for (int n = 1; n <= max_n; ++n) {
    const auto all = partitions_up_to(max_pair_size, n);
    for (const Partition& lambda : all)
      for (const Partition& mu : all) {
        if (lambda.size() + mu.size() > max_pair_size) continue;
        for (int s = 0; s < n; ++s) {
          ++r.checked;
          const std::string ctx = "lambda=" + format_partition(lambda) +
                                  " mu=" + format_partition(mu) + " s=" + std::to_string(s);
          const Partition cut = s_cut(lambda, mu, s);
          if (cut.size() != lambda.size() + mu.size()) {
            note_failure(r, ctx + ": cut size is off");
            continue;
          }
          if (s_cut(mu, lambda, s) != cut) {
            note_failure(r, ctx + ": cut is not symmetric");
            continue;
          }
          const SPoset poset = s_poset(lambda, mu, s);
          if (poset.members.empty() || poset.members.front() != cut) {
            note_failure(r, ctx + ": cut is not the poset minimum");
            continue;
          }
          if (poset.members.size() > 1 && !(poset.members[1] > cut)) {
            note_failure(r, ctx + ": minimum is not strict");
            continue;
          }
          if (!verify_witness_hybrid(s_cut_witness(lambda, mu, s), lambda, mu, s))
            note_failure(r, ctx + ": witness failed the hybrid check");
        }
      }
  }
  return r;
}

SweepResult sweep_theorem(int max_side_size, int max_n) {
  SweepResult r;
  r.name = "tensor-theorem";
  for (int n = 1; n <= max_n; ++n) {
    std::map<Partition, MonomialPoly> polys;
    auto poly_of = [&](const Partition& p) -> const MonomialPoly& {
      auto it = polys.find(p);
      if (it == polys.end()) it = polys.emplace(p, schur_polynomial(p)).first;
      return it->second;
    };
    for (int total = 0; total <= max_side_size; ++total) {
      std::vector<std::pair<Partition, Partition>> pairs;
      std::vector<int> cls;
      std::map<std::string, int> classes;
      for (int a = 0; a <= total; ++a)
        for (const Partition& lambda : partitions_of(a, n))
          for (const Partition& mu : partitions_of(total - a, n)) {
            const auto key = poly_key(poly_of(lambda) * poly_of(mu));
            const auto it = classes.try_emplace(key, static_cast<int>(classes.size())).first;
            pairs.emplace_back(lambda, mu);
            cls.push_back(it->second);
          }
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i; j < pairs.size(); ++j) {
          ++r.checked;
          const bool fast = tensor_equal(
              TensorQuery(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second));
          if (fast != (cls[i] == cls[j]))
            note_failure(r, "lambda=" + format_partition(pairs[i].first) +
                                " mu=" + format_partition(pairs[i].second) +
                                " nu=" + format_partition(pairs[j].first) +
                                " rho=" + format_partition(pairs[j].second) +
                                (fast ? ": claimed equal, products differ"
                                      : ": claimed different, products equal"));
        }
    }
  }
  return r;
}

SnnSweepResult sweep_snn_soundness(int max_side_size, int max_n) {
  SnnSweepResult out;
  out.base.name = "snn-soundness";
  for (int n = 1; n <= max_n; ++n) {
    for (int total = 0; total <= max_side_size; ++total) {
      std::vector<std::pair<Partition, Partition>> pairs;
      std::vector<SchurExpansion> expansions;
      for (int a = 0; a <= total; ++a)
        for (const Partition& lambda : partitions_of(a, n))
          for (const Partition& mu : partitions_of(total - a, n)) {
            expansions.push_back(product_schur_expansion(lambda, mu));
            pairs.emplace_back(lambda, mu);
          }
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          ++out.base.checked;
          const auto& [l1, m1] = pairs[i];
          const auto& [l2, m2] = pairs[j];
          const auto cert = snn_failure_test(l1, m1, l2, m2);
          const auto negative = negative_schur_witness(expansions[i], expansions[j]);
          if (cert) {
            ++out.certificates;
            if (!negative)
              note_failure(out.base, "false positive at lambda=" + format_partition(l1) +
                                         " mu=" + format_partition(m1) +
                                         " nu=" + format_partition(l2) +
                                         " rho=" + format_partition(m2));
            else if (!verify_certificate(*cert, l1, m1, l2, m2))
              note_failure(out.base, "certificate failed recomputation at lambda=" +
                                         format_partition(l1) + " mu=" + format_partition(m1) +
                                         " nu=" + format_partition(l2) +
                                         " rho=" + format_partition(m2));
          } else if (negative) {
            ++out.inconclusive_negative;
            if (out.inconclusive_negative_example.empty())
              out.inconclusive_negative_example =
                  "lambda=" + format_partition(l1) + " mu=" + format_partition(m1) +
                  " nu=" + format_partition(l2) + " rho=" + format_partition(m2) +
                  " (n=" + std::to_string(n) +
                  ", negative at " + format_partition(*negative) + ")";
          }
        }
    }
  }
  return out;
}

SweepResult sweep_triviality_bound(int max_size) {
  SweepResult r;
  r.name = "triviality-bound";
  for (int m = 0; m <= max_size; ++m)
    for (int mp = 0; mp <= max_size; ++mp) {
      const int mx = std::max(m, mp);
      for (int n = mx + 1; n <= mx + 2; ++n) {
        ++r.checked;
        const std::string ctx =
            "m=" + std::to_string(m) + " m'=" + std::to_string(mp) + " n=" + std::to_string(n);
        if (triviality_bound(m, mp, n) != TrivialityBound::guaranteed_trivial) {
          note_failure(r, ctx + ": bound should guarantee triviality");
          continue;
        }
        if (find_nontrivial(m, mp, n).has_value())
          note_failure(r, ctx + ": unexpected nontrivial pair above the bound");
      }
      if (std::min(m, mp) < 2) continue;
      for (int n = 1; n <= mx; ++n) {
        ++r.checked;
        const std::string ctx =
            "m=" + std::to_string(m) + " m'=" + std::to_string(mp) + " n=" + std::to_string(n);
        if (triviality_bound(m, mp, n) != TrivialityBound::nontrivial_possible) {
          note_failure(r, ctx + ": bound should not guarantee triviality");
          continue;
        }
        const auto w = find_nontrivial(m, mp, n);
        if (!w) {
          note_failure(r, ctx + ": no nontrivial witness found");
          continue;
        }
        const bool nontrivial = SolutionPair(w->lambda, w->mu) != w->pair;
        const bool confirmed = verify_theorem_bruteforce(
            TensorQuery(w->lambda, w->mu, w->pair.first(), w->pair.second()));
        if (!nontrivial || !confirmed)
          note_failure(r, ctx + ": witness not confirmed by the oracle");
      }
    }
  return r;
}

}  // namespace schur
