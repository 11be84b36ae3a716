#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "coxcent/catalog.hpp"
#include "coxcent/scalar.hpp"
#include "oracle.hpp"

using namespace coxcent;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

double eval_poly(const std::vector<BigInt>& p, double x) {
  double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
  return acc;
}

AlgebraicScalar random_scalar(std::mt19937& rng, const FieldContext& f, long range = 20) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return AlgebraicScalar(f, c);
}

}  // namespace

TEST_CASE("field order is the lcm of labels >= 3") {
  SUBCASE("only labels 2 and 3") {
    auto f = make_field_context(catalog_matrix("A4"));
    CHECK(f->order() == 3);
    CHECK(f->degree() == 1);
    CHECK(f->min_poly() == ints({-1, 1}));
  }
  SUBCASE("a single 4-bond") {
    auto f = make_field_context(CoxeterMatrix({{1, 4}, {4, 1}}));
    CHECK(f->order() == 4);
    CHECK(f->min_poly() == ints({-2, 0, 1}));
  }
  SUBCASE("labels 3 and 4 mixed") {
    auto f = make_field_context(catalog_matrix("F4"));
    CHECK(f->order() == 12);
    CHECK(f->degree() == euler_phi(24) / 2);
    CHECK(f->degree() == 4);
    CHECK(std::fabs(eval_poly(f->min_poly(), 2 * std::cos(std::numbers::pi / 12))) < 1e-12);
    CHECK(f->min_poly() == ints({1, 0, -4, 0, 1}));
  }
  SUBCASE("no bond above 2") {
    auto f = make_field_context(CoxeterMatrix({{1, 2}, {2, 1}}));
    CHECK(f->order() == 1);
    CHECK(f->min_poly() == ints({2, 1}));
  }
  SUBCASE("infinite bonds do not enter the lcm") {
    auto f = make_field_context(catalog_matrix("Atilde1"));
    CHECK(f->order() == 1);
  }
}

TEST_CASE("minimal polynomials are irreducible and vanish at 2cos(pi/N)") {
  CHECK(min_poly_2cos(5) == ints({-1, -1, 1}));
  CHECK(min_poly_2cos(6) == ints({-3, 0, 1}));
  for (unsigned long n = 2; n <= 60; ++n) {
    CAPTURE(n);
    const auto p = min_poly_2cos(n);
    CHECK(p.back() == 1);
    CHECK(p.size() - 1 == euler_phi(2 * n) / 2);
    double scale = 0;
    for (std::size_t i = 0; i < p.size(); ++i) scale += std::fabs(p[i].get_d()) * std::ldexp(1.0, int(i));
    CHECK(std::fabs(eval_poly(p, 2 * std::cos(std::numbers::pi / static_cast<double>(n)))) <
          1e-13 * scale);
    if (p.size() > 2) {
      // Monic integer polynomial: rational roots are integers, and all roots lie in [-2, 2].
      for (long r = -2; r <= 2; ++r) CHECK(eval_poly(p, static_cast<double>(r)) != 0.0);
    }
  }
}

TEST_CASE("embed_2cos") {
  auto f = FieldContext::create(12);
  CHECK(embed_2cos(2, *f).is_zero());
  CHECK(embed_2cos(kInfiniteBond, *f) == AlgebraicScalar(*f, 2L));
  const auto c4 = embed_2cos(4, *f);
  CHECK(c4.coeffs() == std::vector<Rational>{0, -3, 0, 1});
  CHECK(c4.to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(embed_2cos(3, *f) == AlgebraicScalar(*f, 1L));
  CHECK(embed_2cos(6, *f).to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(embed_2cos(12, *f) == AlgebraicScalar::theta(*f));
  CHECK_THROWS_AS(embed_2cos(5, *f), Error);
  CHECK_THROWS_AS(embed_2cos(8, *f), Error);
}

TEST_CASE("ring arithmetic") {
  auto f4 = FieldContext::create(4);
  auto f12 = FieldContext::create(12);
  std::mt19937 rng(7);
  const auto a = random_scalar(rng, *f12);
  CHECK(a + AlgebraicScalar(*f12, 0L) == a);
  const auto t4 = AlgebraicScalar::theta(*f4);
  CHECK(t4 * t4 == AlgebraicScalar(*f4, 2L));
  const auto t = AlgebraicScalar::theta(*f12);
  const auto x = t * t * t - AlgebraicScalar(*f12, 3L) * t;
  CHECK(x * x == AlgebraicScalar(*f12, 2L));
  CHECK((a - a).is_zero());
  CHECK(-(-a) == a);
}

TEST_CASE("mixed fields are rejected") {
  auto f4 = FieldContext::create(4);
  auto f5 = FieldContext::create(5);
  const auto a = AlgebraicScalar::theta(*f4);
  const auto b = AlgebraicScalar::theta(*f5);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS((void)(a == b), Error);
}

TEST_CASE("canonical form is idempotent") {
  auto f = FieldContext::create(12);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_scalar(rng, *f) * random_scalar(rng, *f);
    CHECK(AlgebraicScalar(*f, a.coeffs()) == a);
    CHECK(a.coeffs().size() == f->degree());
  }
  // The minimal polynomial itself reduces to the all-zero vector.
  const auto p = f->min_poly();
  std::vector<Rational> as_rational(p.begin(), p.end());
  CHECK(AlgebraicScalar(*f, as_rational).is_zero());
}

TEST_CASE("sign examples") {
  auto f = FieldContext::create(4);
  const auto one = AlgebraicScalar(*f, 1L);
  const auto t = AlgebraicScalar::theta(*f);
  CHECK(AlgebraicScalar(*f, 0L).sign() == 0);
  CHECK((t - one).sign() == 1);
  CHECK((one - t).sign() == -1);
}

TEST_CASE("sign near zero needs interval refinement") {
  // sqrt(2) - 1414213562373095/10^15 is about 4.9e-16, below the fast path's reach.
  auto f = FieldContext::create(4);
  const auto t = AlgebraicScalar::theta(*f);
  const Rational approx(BigInt("1414213562373095"), BigInt("1000000000000000"));
  const Rational above(BigInt("1414213562373096"), BigInt("1000000000000000"));
  CHECK((t - AlgebraicScalar(*f, approx)).sign() == 1);
  CHECK((t - AlgebraicScalar(*f, above)).sign() == -1);
  // phi minus a 31-digit truncation of it, and that plus 10^-30.
  auto f5 = FieldContext::create(5);
  const auto phi = AlgebraicScalar::theta(*f5);
  const Rational eps(1, BigInt("1000000000000000000000000000000"));
  const auto near = phi - AlgebraicScalar(*f5, Rational(BigInt("1618033988749894848204586834365"),
                                                        BigInt("1000000000000000000000000000000")));
  CHECK(near.sign() == (oracle::high_precision_value(near) > 0 ? 1 : -1));
  CHECK((near + AlgebraicScalar(*f5, eps)).sign() ==
        (oracle::high_precision_value(near + AlgebraicScalar(*f5, eps)) > 0 ? 1 : -1));
}

TEST_CASE("sign is multiplicative and matches high-precision evaluation") {
  std::mt19937 rng(2024);
  for (unsigned long n : {4ul, 5ul, 6ul, 7ul, 12ul, 30ul}) {
    auto f = FieldContext::create(n);
    for (int i = 0; i < 60; ++i) {
      const auto a = random_scalar(rng, *f);
      const auto b = random_scalar(rng, *f);
      CHECK((a * b).sign() == a.sign() * b.sign());
      CHECK((a.sign() == 0) == a.is_zero());
      if (!a.is_zero()) {
        const auto hp = oracle::high_precision_value(a);
        CHECK(a.sign() == (hp > 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("Dickson half-angle identity") {
  for (unsigned long n : {4ul, 5ul, 6ul, 12ul}) {
    auto f = FieldContext::create(n);
    const AlgebraicScalar two(*f, 2L);
    for (unsigned long k = 0; k <= 2 * n; ++k) {
      const auto dk = dickson(k, *f);
      CHECK(dickson(2 * k, *f) == dk * dk - two);
    }
    // D_N(theta) = 2cos(pi) = -2.
    CHECK(dickson(n, *f) == AlgebraicScalar(*f, -2L));
  }
}

TEST_CASE("interval evaluation encloses the value") {
  std::mt19937 rng(99);
  for (unsigned long n : {4ul, 5ul, 12ul}) {
    auto f = FieldContext::create(n);
    for (unsigned bits : {0u, 16u, 64u}) {
      const auto enc = f->theta_enclosure(bits);
      CHECK(enc.lo < enc.hi);
      CHECK(enc.lo.get_d() <= f->theta_approx() + 1e-15);
      CHECK(enc.hi.get_d() >= f->theta_approx() - 1e-15);
    }
    for (int i = 0; i < 100; ++i) {
      const auto a = random_scalar(rng, *f, 1000);
      const auto value = evaluate(a, f->theta_enclosure(64));
      const double x = a.to_double();
      const double slack = 1e-12 * (1 + std::fabs(x));
      CHECK(value.lo.get_d() - slack <= x);
      CHECK(x <= value.hi.get_d() + slack);
    }
  }
}

TEST_CASE("concurrent sign determination on a shared field") {
  auto f = FieldContext::create(7);
  const auto t = AlgebraicScalar::theta(*f);
  const Rational close(BigInt("18019377358048382524722046390148901023"),
                       BigInt("10000000000000000000000000000000000000"));
  const auto a = t - AlgebraicScalar(*f, close);
  const int expected = oracle::high_precision_value(a) > 0 ? 1 : -1;
  std::vector<std::thread> pool;
  std::vector<int> results(8, 0);
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { results[i] = a.sign(); });
  for (auto& th : pool) th.join();
  for (int r : results) CHECK(r == expected);
}
