#include "schur/schur_nonneg.hpp"

#include <map>
#include <string>

#include "schur/cut_poset.hpp"
#include "schur/errors.hpp"

namespace schur {

namespace {

void check_ranks(const Partition& lambda, const Partition& mu, const Partition& nu,
                 const Partition& rho) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank() || lambda.rank() != rho.rank())
    throw std::invalid_argument("the four partitions must share one rank");
}

void check_degrees(const Partition& lambda, const Partition& mu, const Partition& nu,
                   const Partition& rho) {
  const long long lhs = lambda.size() + mu.size();
  const long long rhs = nu.size() + rho.size();
  if (lhs != rhs)
    throw DegreeMismatch("products have different total degree: " + std::to_string(lhs) +
                         " vs " + std::to_string(rhs));
}

struct CutData {
  Partition kappa;
  Partition xi;
  SigmaTau st;
};

CutData cut_data(const Partition& lambda, const Partition& mu, const Partition& nu,
                 const Partition& rho, int s) {
  Partition kappa = s_cut(lambda, mu, s);
  Partition xi = s_cut(nu, rho, s);
  const int n = lambda.rank();
  SigmaTau st;
  st.sigma.reserve(static_cast<std::size_t>(n));
  st.tau.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < s; ++i) {
    st.sigma.push_back(kappa.part(i));
    st.tau.push_back(xi.part(i));
  }
  for (int i = s; i < n; ++i) {
    st.sigma.push_back(xi.part(i));
    st.tau.push_back(kappa.part(i));
  }
  return {std::move(kappa), std::move(xi), std::move(st)};
}

// When tau(s) > sigma(s), the first index where the two cuts differ
// decides which argument rules out the coefficient: inside the forced
// prefix it is the row-filling argument, past it the lex-minimality of
// the cut.
std::optional<SnnCase> certifying_case(const Partition& kappa, const Partition& xi, int s) {
  for (int i = 0; i < kappa.rank(); ++i) {
    if (kappa.part(i) == xi.part(i)) continue;
    if (i < s && xi.part(i) > kappa.part(i)) return SnnCase::prefix;
    if (i >= s && kappa.part(i) > xi.part(i)) return SnnCase::minimality;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

SigmaTau sigma_tau(const Partition& lambda, const Partition& mu, const Partition& nu,
                   const Partition& rho, int s) {
  check_ranks(lambda, mu, nu, rho);
  return cut_data(lambda, mu, nu, rho, s).st;
}

std::optional<SnnCertificate> snn_failure_test(const Partition& lambda, const Partition& mu,
                                               const Partition& nu, const Partition& rho) {
  check_ranks(lambda, mu, nu, rho);
  check_degrees(lambda, mu, nu, rho);
  for (int s = 0; s < lambda.rank(); ++s) {
    CutData d = cut_data(lambda, mu, nu, rho, s);
    if (d.st.tau > d.st.sigma) {
      const auto proof_case = certifying_case(d.kappa, d.xi, s);
      if (!proof_case) throw std::logic_error("inconsistent certificate derivation");
      return SnnCertificate{s,          std::move(d.st.sigma), std::move(d.st.tau),
                            std::move(d.xi), *proof_case,       SnnDirection::lhs};
    }
  }
  return std::nullopt;
}

std::vector<SnnCertificate> snn_all_certificates(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu, const Partition& rho) {
  check_ranks(lambda, mu, nu, rho);
  check_degrees(lambda, mu, nu, rho);
  std::vector<SnnCertificate> out;
  for (int s = 0; s < lambda.rank(); ++s) {
    CutData d = cut_data(lambda, mu, nu, rho, s);
    if (d.st.tau > d.st.sigma) {
      const auto proof_case = certifying_case(d.kappa, d.xi, s);
      if (!proof_case) throw std::logic_error("inconsistent certificate derivation");
      out.push_back(SnnCertificate{s, std::move(d.st.sigma), std::move(d.st.tau),
                                   std::move(d.xi), *proof_case, SnnDirection::lhs});
    }
  }
  return out;
}

bool verify_certificate(const SnnCertificate& cert, const Partition& lambda, const Partition& mu,
                        const Partition& nu, const Partition& rho) {
  check_ranks(lambda, mu, nu, rho);
  const bool swapped = cert.direction == SnnDirection::rhs;
  const Partition& l = swapped ? nu : lambda;
  const Partition& m = swapped ? rho : mu;
  const Partition& v = swapped ? lambda : nu;
  const Partition& r = swapped ? mu : rho;
  if (cert.s < 0 || cert.s >= l.rank()) return false;
  const CutData d = cut_data(l, m, v, r, cert.s);
  if (cert.sigma != d.st.sigma || cert.tau != d.st.tau) return false;
  if (!(d.st.tau > d.st.sigma)) return false;
  if (cert.witness != d.xi) return false;
  const auto proof_case = certifying_case(d.kappa, d.xi, cert.s);
  if (!proof_case || *proof_case != cert.proof_case) return false;
  if (lr_coefficient(cert.witness, l, m) != 0) return false;
  if (lr_coefficient(cert.witness, v, r) <= 0) return false;
  return true;
}

std::optional<Partition> snn_bruteforce(const Partition& lambda, const Partition& mu,
                                        const Partition& nu, const Partition& rho) {
  check_ranks(lambda, mu, nu, rho);
  check_degrees(lambda, mu, nu, rho);
  return negative_schur_witness(product_schur_expansion(lambda, mu),
                                product_schur_expansion(nu, rho));
}

std::optional<Partition> negative_schur_witness(const SchurExpansion& a,
                                                const SchurExpansion& b) {
  std::map<Partition, long long> diff(a.terms().begin(), a.terms().end());
  for (const auto& [p, c] : b.terms()) {
    const auto it = diff.try_emplace(p, 0).first;
    it->second -= c;
  }
  for (auto it = diff.rbegin(); it != diff.rend(); ++it)
    if (it->second < 0) return it->first;
  return std::nullopt;
}

}  // namespace schur
