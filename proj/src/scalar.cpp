#include "coxcent/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace coxcent {

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw InvariantViolation("polynomial division degree mismatch");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InvariantViolation("inexact cyclotomic division");
  }
  return quot;
}

IntPoly cyclotomic(unsigned long m) {
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_exact(p, cyclotomic(d));
  }
  return p;
}

// Dickson polynomials D_0 .. D_k as integer polynomials in y.
std::vector<IntPoly> dickson_polys(unsigned long k) {
  std::vector<IntPoly> d;
  d.push_back({2});
  d.push_back({0, 1});
  for (unsigned long j = 1; j < k; ++j) {
    IntPoly next(d[j].size() + 1, 0);
    for (std::size_t i = 0; i < d[j].size(); ++i) next[i + 1] += d[j][i];
    for (std::size_t i = 0; i < d[j - 1].size(); ++i) next[i] -= d[j - 1][i];
    trim(next);
    d.push_back(std::move(next));
  }
  return d;
}

Rational eval_exact(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
  return acc;
}

int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

// Product of intervals when the second factor is nonnegative.
RationalInterval mul_nonneg(const RationalInterval& x, const RationalInterval& y) {
  Rational a = x.lo * y.lo, b = x.lo * y.hi;
  Rational c = x.hi * y.lo, e = x.hi * y.hi;
  return {std::min(a, b), std::max(c, e)};
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> min_poly_2cos(unsigned long order) {
  if (order == 0) throw Error("field order N must be positive");
  if (order == 1) return {2, 1};  // 2cos(pi) = -2
  // Phi_{2N}(x) = x^k g(x + 1/x) with k = phi(2N)/2, and x^j + x^-j = D_j(y).
  const IntPoly phi = cyclotomic(2 * order);
  const std::size_t k = (phi.size() - 1) / 2;
  const auto dick = dickson_polys(k);
  IntPoly g(k + 1, 0);
  g[0] = phi[k];
  for (std::size_t j = 1; j <= k; ++j) {
    const BigInt& a = phi[k + j];
    for (std::size_t i = 0; i < dick[j].size(); ++i) g[i] += a * dick[j][i];
  }
  trim(g);
  if (g.back() != 1) throw InvariantViolation("minimal polynomial is not monic");
  return g;
}

FieldContext::FieldContext(unsigned long order)
    : order_(order),
      min_poly_(min_poly_2cos(order)),
      theta_approx_(2.0 * std::cos(std::numbers::pi / static_cast<double>(order))) {}

std::shared_ptr<const FieldContext> FieldContext::create(unsigned long order) {
  if (order == 0) throw Error("field order N must be positive");
  if (order > 10000) throw Error("field order N = " + std::to_string(order) + " is too large");
  return std::shared_ptr<const FieldContext>(new FieldContext(order));
}

RationalInterval FieldContext::theta_enclosure(unsigned bits) const {
  if (degree() == 1) {
    Rational root(-min_poly_[0]);
    return {root, root};
  }
  std::lock_guard lock(cache_mutex_);
  if (enclosures_.empty()) {
    // theta is the largest root; the next one, 2cos(3pi/N), is at distance
    // about 8pi^2/N^2 > 2^-30 for N <= 10000.
    const Rational delta(1, 1 << 30);
    RationalInterval start{Rational(theta_approx_) - delta, Rational(theta_approx_) + delta};
    const int lo_sign = sign_of(eval_exact(min_poly_, start.lo));
    const int hi_sign = sign_of(eval_exact(min_poly_, start.hi));
    if (lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign) {
      throw InvariantViolation("failed to isolate 2cos(pi/" + std::to_string(order_) + ")");
    }
    enclosures_.emplace(0, start);
  }
  auto it = enclosures_.upper_bound(bits);
  --it;
  if (it->first == bits) return it->second;
  RationalInterval cur = it->second;
  const int lo_sign = sign_of(eval_exact(min_poly_, cur.lo));
  for (unsigned level = it->first; level < bits; ++level) {
    Rational mid = (cur.lo + cur.hi) / 2;
    const int s = sign_of(eval_exact(min_poly_, mid));
    if (s == 0) return {mid, mid};
    if (s == lo_sign) cur.lo = mid;
    else cur.hi = mid;
  }
  enclosures_.emplace(bits, cur);
  return cur;
}

FieldPtr make_field_context(const CoxeterMatrix& matrix) {
  unsigned long n = 1;
  for (std::size_t s = 0; s < matrix.rank(); ++s) {
    for (std::size_t t = s + 1; t < matrix.rank(); ++t) {
      const BondLabel m = matrix.label(s, t);
      if (m >= 3) n = std::lcm(n, static_cast<unsigned long>(m));
    }
  }
  return FieldContext::create(n);
}

AlgebraicScalar::AlgebraicScalar(const FieldContext& field, long value)
    : AlgebraicScalar(field, Rational(value)) {}

AlgebraicScalar::AlgebraicScalar(const FieldContext& field, Rational value)
    : field_(&field), coeffs_(field.degree(), 0) {
  coeffs_[0] = std::move(value);
}

AlgebraicScalar::AlgebraicScalar(const FieldContext& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  reduce();
}

AlgebraicScalar AlgebraicScalar::theta(const FieldContext& field) {
  return AlgebraicScalar(field, std::vector<Rational>{0, 1});
}

void AlgebraicScalar::reduce() {
  const auto& p = field_->min_poly();
  const std::size_t d = p.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > d;) {
    if (coeffs_[i] == 0) continue;
    const Rational c = coeffs_[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] != 0) coeffs_[i - d + j] -= c * p[j];
    }
  }
  coeffs_.resize(d, 0);
}

void AlgebraicScalar::check_same_field(const AlgebraicScalar& other) const {
  if (field_ != other.field_) throw Error("scalars from different fields cannot be combined");
}

bool AlgebraicScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool AlgebraicScalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& other) {
  check_same_field(other);
  if (other.is_rational()) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  reduce();
  return *this;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void AlgebraicScalar::add_product(const AlgebraicScalar& factor, const AlgebraicScalar& other) {
  check_same_field(factor);
  check_same_field(other);
  if (factor.is_rational()) {
    const Rational& f = factor.coeffs_[0];
    if (f == 0) return;
    if (f == 1) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (other.coeffs_[i] != 0) coeffs_[i] += f * other.coeffs_[i];
      }
    }
    return;
  }
  *this += factor * other;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

double AlgebraicScalar::to_double() const {
  const double theta = field_->theta_approx();
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * theta + coeffs_[i].get_d();
  return acc;
}

int AlgebraicScalar::sign() const {
  if (is_rational()) return sign_of(coeffs_[0]);
  if (is_zero()) return 0;

  // Floating-point fast path with a generous a-priori error bound. Since
  // 0 < theta < 2 here, |c_i theta^i| <= |c_i| 2^i.
  double approx = 0.0;
  double magnitude = 0.0;
  bool finite = true;
  const double theta = field_->theta_approx();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const double c = coeffs_[i].get_d();
    if (!std::isfinite(c)) finite = false;
    approx = approx * theta + c;
    magnitude += std::fabs(c) * std::ldexp(static_cast<double>(i + 1), static_cast<int>(i));
  }
  if (finite && std::isfinite(approx) && std::isfinite(magnitude)) {
    const double bound = 1e-12 * magnitude;
    if (approx > bound) return 1;
    if (approx < -bound) return -1;
  }

  for (unsigned bits = 64;; bits *= 2) {
    const RationalInterval value = evaluate(*this, field_->theta_enclosure(bits));
    if (value.lo > 0) return 1;
    if (value.hi < 0) return -1;
    if (bits > (1u << 20)) throw InvariantViolation("sign refinement did not terminate");
  }
}

std::string AlgebraicScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational abs_c = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0 || abs_c != 1) out << abs_c.get_str();
    if (i >= 1) out << (abs_c != 1 ? "*" : "") << 't';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

AlgebraicScalar dickson(unsigned long k, const FieldContext& field) {
  AlgebraicScalar prev(field, 2L);
  if (k == 0) return prev;
  const AlgebraicScalar theta = AlgebraicScalar::theta(field);
  AlgebraicScalar cur = theta;
  for (unsigned long j = 1; j < k; ++j) {
    AlgebraicScalar next = theta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

AlgebraicScalar embed_2cos(BondLabel m, const FieldContext& field) {
  if (m == kInfiniteBond) return AlgebraicScalar(field, 2L);
  if (m == 1) throw Error("bond label 1 has no reflection coefficient");
  if (m == 2) return AlgebraicScalar(field, 0L);
  if (field.order() % m != 0) {
    throw Error("bond label " + std::to_string(m) + " does not divide field order " +
                std::to_string(field.order()));
  }
  return dickson(field.order() / m, field);
}

RationalInterval evaluate(const AlgebraicScalar& a, const RationalInterval& theta_enc) {
  const auto& c = a.coeffs();
  RationalInterval acc{c.back(), c.back()};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = mul_nonneg(acc, theta_enc);
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

}  // namespace coxcent
