#pragma once

#include <optional>
#include <vector>

#include "schur/lr.hpp"
#include "schur/partition.hpp"

namespace schur {

struct SigmaTau {
  std::vector<int> sigma;
  std::vector<int> tau;
};

/// The spliced sequences sigma(s) = kappa_1..kappa_s xi_{s+1}..xi_n and
/// tau(s) = xi_1..xi_s kappa_{s+1}..kappa_n, where kappa is the s-cut of
/// (lambda, mu) and xi the s-cut of (nu, rho).
SigmaTau sigma_tau(const Partition& lambda, const Partition& mu, const Partition& nu,
                   const Partition& rho, int s);

enum class SnnCase { prefix, minimality };

// Which product's coefficient vanishes at the witness. lhs certifies
// that s_lambda s_mu - s_nu s_rho is not Schur non-negative.
enum class SnnDirection { lhs, rhs };

/// Machine-checkable evidence of failed Schur non-negativity: at cut
/// index s the splices satisfy tau lex-greater than sigma, so the
/// witness has a vanishing coefficient on one side and a positive one on
/// the other.
struct SnnCertificate {
  int s;
  std::vector<int> sigma;
  std::vector<int> tau;
  Partition witness;
  SnnCase proof_case;
  SnnDirection direction;
};

/// Scans s = 0..n-1 ascending and certifies on the first tau(s)
/// lex-greater than sigma(s). One-directional: std::nullopt means
/// inconclusive, never a claim of non-negativity. Throws DegreeMismatch
/// when the products have different total degree.
std::optional<SnnCertificate> snn_failure_test(const Partition& lambda, const Partition& mu,
                                               const Partition& nu, const Partition& rho);

/// All certifying s values, ascending.
std::vector<SnnCertificate> snn_all_certificates(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu, const Partition& rho);

/// Recomputes both LR coefficients at the witness and re-derives the
/// structural data (cuts, splices, first differing index, proof case)
/// independently of however the certificate was produced.
bool verify_certificate(const SnnCertificate& cert, const Partition& lambda,
                        const Partition& mu, const Partition& nu, const Partition& rho);

/// Definitive n-variable check by expanding both products in the Schur
/// basis: the lex-greatest partition with a negative coefficient in the
/// difference, or std::nullopt when the difference is Schur non-negative.
std::optional<Partition> snn_bruteforce(const Partition& lambda, const Partition& mu,
                                        const Partition& nu, const Partition& rho);

/// Shared by snn_bruteforce and the exhaustive sweeps: lex-greatest
/// partition where a - b dips negative.
std::optional<Partition> negative_schur_witness(const SchurExpansion& a,
                                                const SchurExpansion& b);

}  // namespace schur
