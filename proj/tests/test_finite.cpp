#include <doctest.h>

#include <random>
#include <set>

#include "coxcent/finite.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace coxcent;
using testing_support::context;
using testing_support::element;

TEST_CASE("group orders") {
  const std::vector<std::pair<const char*, std::size_t>> orders{
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"H3", 120}, {"I2(7)", 14}, {"D4", 192}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    const auto g = enumerate_group(context(name));
    CHECK(g.size() == order);
    CHECK(g.element(0).is_identity());
  }
  CHECK_THROWS_AS(enumerate_group(context("Atilde2"), 10000), CapExceeded);
  CHECK_THROWS_AS(enumerate_group(context("A3"), 23), CapExceeded);
  CHECK(enumerate_group(context("A3"), 24).size() == 24);
}

TEST_CASE("enumeration matches the floating-point oracle") {
  for (const char* type : {"B3", "H3", "D4", "I2(8)"}) {
    CAPTURE(type);
    auto ctx = context(type);
    const auto g = enumerate_group(ctx);
    const auto ref = oracle::enumerate(ctx->matrix(), 5000);
    REQUIRE(ref);
    REQUIRE(g.size() == ref->size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.element(i).word() == ref->words[i]);
    // Cayley tables agree with oracle products.
    for (FiniteGroup::Index i = 0; i < g.size(); ++i) {
      CHECK(g.inverse(g.inverse(i)) == i);
      CHECK(g.product(i, g.inverse(i)) == 0);
      for (Generator s = 0; s < ctx->rank(); ++s) {
        CHECK(g.right(i, s) == ref->product(i, s + 1));
        CHECK(g.left(s, i) == ref->product(s + 1, i));
      }
    }
  }
}

TEST_CASE("products and conjugates through the tables") {
  auto ctx = context("F4");
  const auto g = enumerate_group(ctx);
  CHECK(g.size() == 1152);
  std::mt19937 rng(2);
  std::uniform_int_distribution<FiniteGroup::Index> pick(0, static_cast<FiniteGroup::Index>(g.size() - 1));
  for (int i = 0; i < 200; ++i) {
    const auto a = pick(rng), b = pick(rng);
    CHECK(g.element(g.product(a, b)) == multiply(g.element(a), g.element(b)));
    CHECK(g.element(g.conjugate(a, b)) == conjugate(g.element(a), g.element(b)));
  }
  CHECK(g.find(Word{0, 1, 0, 1, 0}) == std::nullopt);  // not a normal form
  CHECK(g.index_of(element(ctx, "2 1")) == *g.find(Word{1, 0}));
}

TEST_CASE("element sets") {
  auto ctx = context("A2");
  const ElementSet s({element(ctx, "1 2"), element(ctx, "1"), element(ctx, "2 1 2"), element(ctx, "1")});
  CHECK(s.size() == 3);
  CHECK(s.elements()[0] == element(ctx, "1"));
  CHECK(s.elements()[2] == element(ctx, "1 2 1"));
  CHECK(s.contains(element(ctx, "2 1 2")));
  CHECK_FALSE(s.contains(element(ctx, "2")));
  CHECK_FALSE(s.closed_under_inverse().has_value());
}

TEST_CASE("centralizers") {
  auto a3 = context("A3");
  const auto g = enumerate_group(a3);
  CHECK(centralizer(GroupElement::identity(a3), g) == g.as_set());
  const auto z = centralizer(element(a3, "1"), g);
  CHECK(z.size() == 4);
  for (const char* w : {"", "1", "3", "1 3"}) CHECK(z.contains(element(a3, w)));
  CHECK(z.closed_under_inverse() == true);

  auto b2 = context("B2");
  const auto gb = enumerate_group(b2);
  CHECK(centralizer(element(b2, "1 2 1 2"), gb).size() == 8);
}

TEST_CASE("centralizer orders match brute force") {
  for (const char* type : {"A3", "B3", "H3"}) {
    CAPTURE(type);
    auto ctx = context(type);
    const auto g = enumerate_group(ctx);
    const auto ref = oracle::enumerate(ctx->matrix(), 5000);
    REQUIRE(ref);
    for (std::size_t i = 0; i < g.size(); i += 7) {
      CHECK(centralizer(g.element(i), g).size() == oracle::centralizer_order(*ref, i));
    }
  }
}

TEST_CASE("normalizers") {
  auto a2 = context("A2");
  const auto g2 = enumerate_group(a2);
  CHECK(normalizer({}, g2) == g2.as_set());
  CHECK(normalizer({0}, g2).size() == 2);
  CHECK(normalizer({0, 1}, g2) == g2.as_set());
  auto a3 = context("A3");
  const auto g3 = enumerate_group(a3);
  const auto n = normalizer({0}, g3);
  CHECK(n.size() == 4);
  CHECK(n.contains(element(a3, "3")));
}

TEST_CASE("centralizer of rho_I equals the normalizer of W_I") {
  CHECK(verify_prop2({0, 1}, enumerate_group(context("B2"))));
  CHECK(verify_prop2({0}, enumerate_group(context("A3"))));
  CHECK(verify_prop2({0, 1, 2}, enumerate_group(context("H3"))));
  CHECK_THROWS_AS(verify_prop2({0, 1}, enumerate_group(context("A2"))), Error);
  for (const char* type : {"B3", "D4", "A4"}) {
    CAPTURE(type);
    auto ctx = context(type);
    const auto g = enumerate_group(ctx);
    for (GeneratorSet I : minus_one_type_subsets(ctx)) CHECK(verify_prop2(I, g));
  }
}

TEST_CASE("minus_one_type_subsets") {
  auto a3 = context("A3");
  const auto subsets = minus_one_type_subsets(a3);
  // Empty, three singletons and {1,3}.
  REQUIRE(subsets.size() == 5);
  CHECK(subsets[0].empty());
  CHECK(std::find(subsets.begin(), subsets.end(), GeneratorSet{0, 2}) != subsets.end());
  CHECK(std::find(subsets.begin(), subsets.end(), GeneratorSet{0, 1}) == subsets.end());
}

TEST_CASE("main identity") {
  auto a3 = context("A3");
  const auto g3 = enumerate_group(a3);
  CHECK(verify_main_identity(GroupElement::identity(a3), g3));
  CHECK(verify_main_identity(element(a3, "2 1 3 2"), g3));
  CHECK_THROWS_AS(verify_main_identity(element(a3, "1 2"), g3), Error);

  auto f4 = context("F4");
  const auto gf = enumerate_group(f4);
  const auto invs = involutions(gf);
  CHECK(invs.size() == 140);
  std::mt19937 rng(90);
  std::uniform_int_distribution<std::size_t> pick(0, invs.size() - 1);
  for (int i = 0; i < 20; ++i) CHECK(verify_main_identity(invs[pick(rng)], gf));
}

TEST_CASE("conjugated normalizer matches the centralizer for every involution") {
  for (const char* type : {"B3", "D4", "I2(6)"}) {
    CAPTURE(type);
    auto ctx = context(type);
    const auto g = enumerate_group(ctx);
    for (const auto& w : involutions(g)) {
      const auto cert = richardson_descent(w);
      const auto ui = inverse(cert.u);
      const ElementSet normal = normalizer(cert.I, g);
      std::vector<GroupElement> conj;
      for (const auto& x : normal.elements()) conj.push_back(multiply(multiply(ui, x), cert.u));
      CHECK(ElementSet(conj) == centralizer(w, g));
    }
  }
}

TEST_CASE("involution counts match the oracle") {
  for (const char* type : {"A3", "B3", "H3", "D4"}) {
    CAPTURE(type);
    auto ctx = context(type);
    const auto ref = oracle::enumerate(ctx->matrix(), 5000);
    REQUIRE(ref);
    CHECK(involutions(enumerate_group(ctx)).size() == oracle::involutions(*ref).size());
  }
}

TEST_CASE("involution classes") {
  SUBCASE("A2") {
    const auto g = enumerate_group(context("A2"));
    const auto classes = involution_classes(g);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].members.size() == 1);
    CHECK(classes[1].members.size() == 3);
    CHECK(classes[1].certificate.I.size() == 1);
  }
  SUBCASE("B2") {
    const auto g = enumerate_group(context("B2"));
    const auto classes = involution_classes(g);
    REQUIRE(classes.size() == 4);
    CHECK(classes[0].certificate.I.empty());
    CHECK(classes[1].certificate.I == GeneratorSet{0});
    CHECK(classes[2].certificate.I == GeneratorSet{1});
    CHECK(classes[3].certificate.I == GeneratorSet{0, 1});
  }
  SUBCASE("A3") {
    auto ctx = context("A3");
    const auto g = enumerate_group(ctx);
    const auto classes = involution_classes(g);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].certificate.I.empty());
    CHECK(classes[1].certificate.I.size() == 1);
    CHECK(classes[2].certificate.I == GeneratorSet{0, 2});
    CHECK(classes[1].members.size() == 6);
    CHECK(classes[2].members.size() == 3);
  }
}

TEST_CASE("involution classes partition the involutions and obey Lagrange") {
  for (const char* type : {"B3", "H3", "D4", "F4"}) {
    CAPTURE(type);
    const auto g = enumerate_group(context(type));
    const auto classes = involution_classes(g);
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& c : classes) {
      CHECK(c.contains_rho);
      CHECK(c.certificate.verification.ok());
      CHECK(c.members.elements().front() == c.representative);
      CHECK(c.members.size() * centralizer(c.representative, g).size() == g.size());
      for (const auto& x : c.members.elements()) {
        CHECK(seen.insert(word_key(x.word())).second);
        CHECK(is_involution(x));
      }
      total += c.members.size();
    }
    CHECK(total == involutions(g).size());
  }
}
