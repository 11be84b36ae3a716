#pragma once

// Brute-force oracles on finite Coxeter groups.
//
// enumerate_group materialises every element with Cayley tables for left
// and right multiplication by generators, so products, inverses and
// conjugates of enumerated elements are table walks. Centralizers,
// normalizers and involution classes are computed by exhaustive search.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcent/group.hpp"
#include "coxcent/involution.hpp"

namespace coxcent {

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// Thrown when a group has more elements than the enumeration cap allows.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("group has more than " + std::to_string(cap) +
              " elements (infinite or too large to enumerate)"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

std::string word_key(const Word& word);

/// A set of group elements without duplicates, kept in ShortLex order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<GroupElement> elements,
                      std::optional<bool> closed_under_inverse = std::nullopt);

  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  bool contains(const GroupElement& g) const { return index_.contains(word_key(g.word())); }
  /// Known only for sets built as subgroups or unions of self-inverse elements.
  std::optional<bool> closed_under_inverse() const { return closed_under_inverse_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<bool> closed_under_inverse_;
};

/// A fully enumerated finite Coxeter group. Elements are indexed in
/// ShortLex order, so index 0 is the identity.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  const ContextPtr& context() const { return ctx_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& element(Index i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  /// Index of an element of this group's context.
  Index index_of(const GroupElement& g) const;
  std::optional<Index> find(const Word& normal_form_word) const;

  Index right(Index g, Generator s) const { return right_[g * rank_ + s]; }
  Index left(Generator s, Index g) const { return left_[g * rank_ + s]; }
  Index inverse(Index g) const { return inverse_[g]; }
  Index product(Index a, Index b) const;
  /// a b a^-1.
  Index conjugate(Index a, Index b) const;

  ElementSet as_set() const { return ElementSet(elements_, true); }
  ElementSet subset(const std::vector<Index>& members, std::optional<bool> closed) const;

 private:
  friend FiniteGroup enumerate_group(const ContextPtr& ctx, std::size_t cap);

  ContextPtr ctx_;
  std::size_t rank_ = 0;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, Index> by_word_;
  std::vector<Index> right_;
  std::vector<Index> left_;
  std::vector<Index> inverse_;
};

/// Enumerates W by breadth-first search, deduplicating by normal form.
/// Throws CapExceeded once more than `cap` elements are found.
FiniteGroup enumerate_group(const ContextPtr& ctx, std::size_t cap = kDefaultEnumerationCap);

/// Z_G(w) = {g : g w = w g}.
ElementSet centralizer(const GroupElement& w, const FiniteGroup& group);

/// N_G(W_I) = {g : g s g^-1 in W_I for all s in I}.
ElementSet normalizer(GeneratorSet I, const FiniteGroup& group);

/// Z_W(rho_I) = N_W(W_I) as sets. Throws Error unless I is of (-1)-type.
bool verify_prop2(GeneratorSet I, const FiniteGroup& group);

/// Z_W(w) = u^-1 N_W(W_I) u as sets, with (I, u) from richardson_descent.
bool verify_main_identity(const GroupElement& w, const FiniteGroup& group);

/// All involutions of the group (identity included), ShortLex order.
std::vector<GroupElement> involutions(const FiniteGroup& group);

struct InvolutionClass {
  ElementSet members;
  /// ShortLex-least element of the class.
  GroupElement representative;
  InvolutionCertificate certificate;
  /// The class contains rho_I for the certificate's I.
  bool contains_rho = false;
};

/// Conjugacy classes of involutions, ordered by representative
/// (length, then ShortLex).
std::vector<InvolutionClass> involution_classes(const FiniteGroup& group);

/// Every I with W_I of (-1)-type, empty set included, ascending by bitmask.
std::vector<GeneratorSet> minus_one_type_subsets(const ContextPtr& ctx);

}  // namespace coxcent
