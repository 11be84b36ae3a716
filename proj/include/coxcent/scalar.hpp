#pragma once

// Exact arithmetic in the real field Q(theta), theta = 2cos(pi/N).
//
// Every Coxeter system gets one field: N is the lcm of its finite bond
// labels >= 3, so 2cos(pi/m) = D_{N/m}(theta) lies in the field for every
// bond label m. Elements are stored as coefficient vectors over the power
// basis 1, theta, ..., theta^(d-1), which makes equality a plain vector
// comparison. Signs are decided by a zero test followed by interval
// evaluation on a certified, refinable enclosure of theta.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "coxcent/coxeter_matrix.hpp"

namespace coxcent {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// The field Q(2cos(pi/N)). Immutable apart from an internal,
/// mutex-guarded cache of refined enclosures of theta.
class FieldContext {
 public:
  /// Field for a given N >= 1.
  static std::shared_ptr<const FieldContext> create(unsigned long order);

  unsigned long order() const { return order_; }
  std::size_t degree() const { return min_poly_.size() - 1; }
  /// Monic minimal polynomial of theta, coefficients from constant term up.
  const std::vector<BigInt>& min_poly() const { return min_poly_; }
  /// Floating-point value of theta (correctly rounded up to libm accuracy).
  double theta_approx() const { return theta_approx_; }

  /// Enclosure of theta of width at most 2^-bits times the initial width.
  /// Safe to call concurrently.
  RationalInterval theta_enclosure(unsigned bits) const;

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  explicit FieldContext(unsigned long order);

  unsigned long order_;
  std::vector<BigInt> min_poly_;
  double theta_approx_;
  mutable std::mutex cache_mutex_;
  mutable std::map<unsigned, RationalInterval> enclosures_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Field for a Coxeter system: N = lcm of finite labels >= 3, or 1 if none.
FieldPtr make_field_context(const CoxeterMatrix& matrix);

/// Minimal polynomial of 2cos(pi/N) over Q, via the cyclotomic polynomial of
/// order 2N. Coefficients from the constant term up; monic.
std::vector<BigInt> min_poly_2cos(unsigned long order);

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// An exact element of Q(theta). Holds a non-owning pointer to its field;
/// the field must outlive the scalar.
class AlgebraicScalar {
 public:
  /// Default-constructed scalars are detached and only valid as assignment
  /// targets.
  AlgebraicScalar() = default;
  AlgebraicScalar(const FieldContext& field, long value);
  AlgebraicScalar(const FieldContext& field, Rational value);
  /// Coefficients over the power basis; reduced modulo the minimal
  /// polynomial, so any length is accepted.
  AlgebraicScalar(const FieldContext& field, std::vector<Rational> coeffs);

  static AlgebraicScalar theta(const FieldContext& field);

  const FieldContext& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when only the constant coefficient may be nonzero.
  bool is_rational() const;
  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  AlgebraicScalar& operator+=(const AlgebraicScalar& other);
  AlgebraicScalar& operator-=(const AlgebraicScalar& other);
  AlgebraicScalar& operator*=(const AlgebraicScalar& other);
  AlgebraicScalar operator-() const;

  /// this += factor * other, without a temporary when factor is rational.
  void add_product(const AlgebraicScalar& factor, const AlgebraicScalar& other);

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);

 private:
  void check_same_field(const AlgebraicScalar& other) const;
  void reduce();

  const FieldContext* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

/// Dickson polynomial D_k evaluated at theta: D_0 = 2, D_1 = theta,
/// D_{j+1} = theta D_j - D_{j-1}. Equals 2cos(k pi / N).
AlgebraicScalar dickson(unsigned long k, const FieldContext& field);

/// Exact 2cos(pi/m) in the field; label 0 (infinity) gives 2, label 2 gives 0.
/// Throws Error if a finite m >= 3 does not divide N.
AlgebraicScalar embed_2cos(BondLabel m, const FieldContext& field);

/// Interval evaluation of the scalar's polynomial at an enclosure of theta.
/// Requires theta_enc.lo >= 0.
RationalInterval evaluate(const AlgebraicScalar& a, const RationalInterval& theta_enc);

}  // namespace coxcent
