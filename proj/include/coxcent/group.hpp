#pragma once

// Coxeter systems acting on the span of their simple roots.
//
// Generators are 0-based internally. A group element keeps its ShortLex
// normal form together with the matrices of w and w^-1 acting on root
// coordinates; column t of the matrix of w is w . alpha_t. Right descents
// are read from the columns of w, left descents from the columns of w^-1.

#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxcent/coxeter_matrix.hpp"
#include "coxcent/scalar.hpp"

namespace coxcent {

using Generator = std::size_t;
using Word = std::vector<Generator>;

/// Subset of the generating set, rank <= 64.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator s : gens) insert(s);
  }
  static GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  bool contains(Generator s) const { return (bits_ >> s) & 1u; }
  void insert(Generator s) { bits_ |= std::uint64_t{1} << s; }
  void erase(Generator s) { bits_ &= ~(std::uint64_t{1} << s); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }
  bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Least member; requires non-empty.
  Generator front() const { return static_cast<Generator>(std::countr_zero(bits_)); }

  /// Members in ascending order.
  std::vector<Generator> members() const;

  friend GeneratorSet operator-(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & ~b.bits_);
  }
  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A Coxeter system with its reflection coefficients 2cos(pi/m_st).
class CoxeterContext {
 public:
  static std::shared_ptr<const CoxeterContext> create(CoxeterMatrix matrix);

  std::size_t rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const FieldContext& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  /// 2cos(pi/m_st) for s != t.
  const AlgebraicScalar& coeff(Generator s, Generator t) const { return coeffs_[s * rank() + t]; }
  /// Generators t != s with a nonzero coefficient, i.e. m_st != 2.
  const std::vector<Generator>& neighbours(Generator s) const { return neighbours_[s]; }

  AlgebraicScalar zero() const { return AlgebraicScalar(*field_, 0L); }
  AlgebraicScalar one() const { return AlgebraicScalar(*field_, 1L); }

  CoxeterContext(const CoxeterContext&) = delete;
  CoxeterContext& operator=(const CoxeterContext&) = delete;

 private:
  explicit CoxeterContext(CoxeterMatrix matrix);

  CoxeterMatrix matrix_;
  FieldPtr field_;
  std::vector<AlgebraicScalar> coeffs_;
  std::vector<std::vector<Generator>> neighbours_;
};

using ContextPtr = std::shared_ptr<const CoxeterContext>;

class FiniteGroup;
FiniteGroup enumerate_group(const ContextPtr& ctx, std::size_t cap);

/// Vector in the basis of simple roots.
struct Root {
  std::vector<AlgebraicScalar> coords;

  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
  std::string to_string() const;
};

Root simple_root(const CoxeterContext& ctx, Generator s);

/// s . gamma: coordinate s becomes -gamma_s + sum_{t != s} 2cos(pi/m_st) gamma_t.
Root simple_reflection_action(const CoxeterContext& ctx, Generator s, const Root& gamma);

/// True for a positive root, false for a negative one. Throws
/// InvariantViolation when the coordinates have mixed signs or are all zero.
bool is_positive(const Root& gamma);

/// n x n matrix over the field, stored column-major.
class ActionMatrix {
 public:
  static ActionMatrix identity(const CoxeterContext& ctx);

  std::size_t size() const { return n_; }
  const AlgebraicScalar& at(std::size_t row, std::size_t col) const {
    return entries_[col * n_ + row];
  }
  Root column(std::size_t col) const;
  /// Sign of the root stored in a column, read off its first nonzero entry.
  int column_sign(std::size_t col) const;
  /// Column equals -alpha_col.
  bool column_is_negated_simple_root(std::size_t col) const;

  /// this := this * (matrix of s).
  void multiply_generator_right(const CoxeterContext& ctx, Generator s);
  /// this := (matrix of s) * this.
  void multiply_generator_left(const CoxeterContext& ctx, Generator s);

  Root apply(const Root& gamma) const;
  friend ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b);
  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

  /// Canonical string encoding of all coefficients, usable as a hash key.
  std::string key() const;

 private:
  AlgebraicScalar& at_mut(std::size_t row, std::size_t col) { return entries_[col * n_ + row]; }

  std::size_t n_ = 0;
  std::vector<AlgebraicScalar> entries_;
};

/// An element of W in ShortLex normal form, with cached action matrices.
class GroupElement {
 public:
  static GroupElement identity(const ContextPtr& ctx);
  static GroupElement generator(const ContextPtr& ctx, Generator s);

  const ContextPtr& context() const { return ctx_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  const ActionMatrix& matrix() const { return matrix_; }
  const ActionMatrix& inverse_matrix() const { return inverse_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.ctx_ == b.ctx_ && a.word_ == b.word_;
  }

  /// Builds the element from its action matrices by peeling least left
  /// descents. Both matrices must describe the same element.
  static GroupElement from_matrices(const ContextPtr& ctx, ActionMatrix matrix,
                                    ActionMatrix inverse);

 private:
  // Enumeration builds normal forms directly and skips the peeling.
  friend FiniteGroup enumerate_group(const ContextPtr& ctx, std::size_t cap);

  GroupElement(ContextPtr ctx, Word word, ActionMatrix matrix, ActionMatrix inverse)
      : ctx_(std::move(ctx)),
        word_(std::move(word)),
        matrix_(std::move(matrix)),
        inverse_(std::move(inverse)) {}

  ContextPtr ctx_;
  Word word_;
  ActionMatrix matrix_;
  ActionMatrix inverse_;
};

/// ShortLex normal form of the product of an arbitrary generator sequence.
GroupElement normal_form(const ContextPtr& ctx, std::span<const Generator> word);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement multiply_generator_right(const GroupElement& a, Generator s);
GroupElement multiply_generator_left(Generator s, const GroupElement& a);
GroupElement inverse(const GroupElement& a);
/// a b a^-1.
GroupElement conjugate(const GroupElement& a, const GroupElement& b);
inline std::size_t length(const GroupElement& a) { return a.length(); }
inline bool is_identity(const GroupElement& a) { return a.is_identity(); }

Root act(const GroupElement& w, const Root& gamma);

/// {s : w . alpha_s < 0} = {s : l(ws) < l(w)}.
GeneratorSet right_descents(const GroupElement& w);
/// {s : w^-1 . alpha_s < 0} = {s : l(sw) < l(w)}.
GeneratorSet left_descents(const GroupElement& w);

/// Phi[w] = {gamma > 0 : w . gamma < 0}, listed as
/// s_k...s_{j+1} . alpha_{i_j} for j = k..1 along the normal form.
std::vector<Root> inversion_set(const GroupElement& w);

/// ShortLex order on words: shorter first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

/// "2 1 2" style rendering, 1-based.
std::string format_word(const Word& word);
/// Parses whitespace-separated 1-based indices. Throws Error naming the
/// offending token when an index is malformed or out of range.
Word parse_word(std::string_view text, std::size_t rank);
/// 1-based members, ascending.
std::vector<std::size_t> to_one_based(GeneratorSet set);

}  // namespace coxcent

template <>
struct std::hash<coxcent::GroupElement> {
  std::size_t operator()(const coxcent::GroupElement& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto s : g.word()) h = (h ^ s) * 0x100000001b3ull;
    return h;
  }
};
