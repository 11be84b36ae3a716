#include "coxcent/involution.hpp"

#include <algorithm>

#include "coxcent/catalog.hpp"

namespace coxcent {

GeneratorSet J_set(const GroupElement& w) { return right_descents(w); }

GeneratorSet K_set(const GroupElement& w) {
  GeneratorSet out;
  for (Generator s = 0; s < w.context()->rank(); ++s) {
    if (w.matrix().column_is_negated_simple_root(s)) out.insert(s);
  }
  return out;
}

bool is_finite_parabolic(GeneratorSet I, const CoxeterContext& ctx) {
  if (!I.is_subset_of(GeneratorSet::all(ctx.rank()))) throw Error("subset exceeds the rank");
  for (const auto& comp : diagram_components(ctx.matrix(), I.members())) {
    if (!recognize_finite_type(ctx.matrix().restricted(comp))) return false;
  }
  return true;
}

GroupElement longest_element(GeneratorSet I, const ContextPtr& ctx) {
  if (!is_finite_parabolic(I, *ctx)) throw Error("parabolic subgroup is infinite");
  GroupElement w = GroupElement::identity(ctx);
  for (;;) {
    bool grew = false;
    for (Generator s : I.members()) {
      if (w.matrix().column_sign(s) > 0) {
        w = multiply_generator_right(w, s);
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

bool is_minus_one_type(GeneratorSet I, const ContextPtr& ctx) {
  if (!is_finite_parabolic(I, *ctx)) return false;
  return I.is_subset_of(K_set(longest_element(I, ctx)));
}

bool is_involution(const GroupElement& w) { return multiply(w, w).is_identity(); }

InvolutionCertificate richardson_descent(const GroupElement& w) {
  if (!is_involution(w)) {
    throw Error("not an involution: w^2 = [" + format_word(multiply(w, w).word()) + "]");
  }
  const auto& ctx = w.context();
  std::vector<Generator> steps;
  GroupElement cur = w;
  for (;;) {
    const GeneratorSet pending = J_set(cur) - K_set(cur);
    if (pending.empty()) break;
    const Generator s = pending.front();
    GroupElement next = multiply_generator_left(s, multiply_generator_right(cur, s));
    if (next.length() + 2 != cur.length()) {
      throw InvariantViolation("conjugating [" + format_word(cur.word()) + "] by s" +
                               std::to_string(s + 1) + " did not shorten it by two");
    }
    steps.push_back(s);
    cur = std::move(next);
  }
  // u = s_k ... s_1 for steps s_1, ..., s_k.
  Word u_word(steps.rbegin(), steps.rend());
  InvolutionCertificate cert{K_set(cur), normal_form(ctx, u_word), std::move(steps), {}};
  cert.verification = check_certificate(w, cert);
  return cert;
}

CertificateCheck check_certificate(const GroupElement& w, const InvolutionCertificate& cert) {
  const auto& ctx = w.context();
  CertificateCheck check;
  check.minus_one_type = is_minus_one_type(cert.I, ctx);
  if (check.minus_one_type) {
    check.conjugation_exact = conjugate(cert.u, w) == longest_element(cert.I, ctx);
  }
  return check;
}

}  // namespace coxcent
