#pragma once

// Involutions and their (-1)-type certificates.
//
// For an involution w, richardson_descent returns (I, u) such that the
// parabolic W_I is finite, its longest element rho_I acts as -1 on the
// simple roots of I, and u w u^-1 = rho_I. The descent conjugates by the
// least s in J_w \ K_w, which shortens w by exactly two, and stops once
// J_w = K_w, at which point w itself is rho_{K_w}.

#include <vector>

#include "coxcent/group.hpp"

namespace coxcent {

/// Result of re-checking a certificate against its involution.
struct CertificateCheck {
  bool minus_one_type = false;
  bool conjugation_exact = false;

  bool ok() const { return minus_one_type && conjugation_exact; }
};

struct InvolutionCertificate {
  GeneratorSet I;
  GroupElement u;
  /// Generators used during the descent, in the order they were applied.
  std::vector<Generator> steps;
  /// Filled in by richardson_descent from check_certificate.
  CertificateCheck verification;
};

/// J_w = {s : w . alpha_s < 0}; the right descent set.
GeneratorSet J_set(const GroupElement& w);
/// K_w = {s : w . alpha_s = -alpha_s}.
GeneratorSet K_set(const GroupElement& w);

/// Every connected component of the diagram on I is a finite catalog type.
bool is_finite_parabolic(GeneratorSet I, const CoxeterContext& ctx);

/// rho_I by greedy ascent within I. Throws Error if W_I is infinite.
GroupElement longest_element(GeneratorSet I, const ContextPtr& ctx);

/// W_I is finite and rho_I . alpha_s = -alpha_s for every s in I.
bool is_minus_one_type(GeneratorSet I, const ContextPtr& ctx);

/// w^2 = 1, identity included.
bool is_involution(const GroupElement& w);

/// Throws Error if w is not an involution, and InvariantViolation if a
/// descent step fails to shorten by two. The returned certificate carries
/// its own verification result.
InvolutionCertificate richardson_descent(const GroupElement& w);

/// Recomputes both certificate conditions from scratch.
CertificateCheck check_certificate(const GroupElement& w, const InvolutionCertificate& cert);

}  // namespace coxcent
