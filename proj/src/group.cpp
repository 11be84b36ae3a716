#include "coxcent/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace coxcent {

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Generator>(std::countr_zero(b)));
  }
  return out;
}

CoxeterContext::CoxeterContext(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), field_(make_field_context(matrix_)) {
  const std::size_t n = matrix_.rank();
  coeffs_.reserve(n * n);
  neighbours_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) {
        coeffs_.emplace_back(*field_, 0L);
        continue;
      }
      coeffs_.push_back(embed_2cos(matrix_.label(s, t), *field_));
      if (matrix_.label(s, t) != 2) neighbours_[s].push_back(t);
    }
  }
}

ContextPtr CoxeterContext::create(CoxeterMatrix matrix) {
  return ContextPtr(new CoxeterContext(std::move(matrix)));
}

Root Root::operator-() const {
  Root out;
  out.coords.reserve(coords.size());
  for (const auto& c : coords) out.coords.push_back(-c);
  return out;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

Root simple_root(const CoxeterContext& ctx, Generator s) {
  Root r;
  r.coords.assign(ctx.rank(), ctx.zero());
  r.coords[s] = ctx.one();
  return r;
}

Root simple_reflection_action(const CoxeterContext& ctx, Generator s, const Root& gamma) {
  Root out = gamma;
  AlgebraicScalar v = -gamma.coords[s];
  for (Generator t : ctx.neighbours(s)) v.add_product(ctx.coeff(s, t), gamma.coords[t]);
  out.coords[s] = std::move(v);
  return out;
}

bool is_positive(const Root& gamma) {
  bool any_pos = false;
  bool any_neg = false;
  for (const auto& c : gamma.coords) {
    const int sg = c.sign();
    any_pos |= sg > 0;
    any_neg |= sg < 0;
  }
  if (any_pos && any_neg) {
    throw InvariantViolation("root " + gamma.to_string() + " has mixed-sign coordinates");
  }
  if (!any_pos && !any_neg) throw InvariantViolation("zero vector is not a root");
  return any_pos;
}

ActionMatrix ActionMatrix::identity(const CoxeterContext& ctx) {
  ActionMatrix m;
  m.n_ = ctx.rank();
  m.entries_.assign(m.n_ * m.n_, ctx.zero());
  for (std::size_t i = 0; i < m.n_; ++i) m.at_mut(i, i) = ctx.one();
  return m;
}

Root ActionMatrix::column(std::size_t col) const {
  Root r;
  r.coords.assign(entries_.begin() + static_cast<std::ptrdiff_t>(col * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((col + 1) * n_));
  return r;
}

int ActionMatrix::column_sign(std::size_t col) const {
  for (std::size_t row = 0; row < n_; ++row) {
    const int sg = at(row, col).sign();
    if (sg != 0) return sg;
  }
  throw InvariantViolation("zero column in action matrix");
}

bool ActionMatrix::column_is_negated_simple_root(std::size_t col) const {
  for (std::size_t row = 0; row < n_; ++row) {
    const AlgebraicScalar& x = at(row, col);
    if (row == col) {
      if (!x.is_rational() || x.coeffs()[0] != -1) return false;
    } else if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

void ActionMatrix::multiply_generator_right(const CoxeterContext& ctx, Generator s) {
  // Column t gains 2cos(pi/m_st) times column s; column s is negated.
  for (Generator t : ctx.neighbours(s)) {
    const AlgebraicScalar& c = ctx.coeff(s, t);
    for (std::size_t row = 0; row < n_; ++row) at_mut(row, t).add_product(c, at(row, s));
  }
  for (std::size_t row = 0; row < n_; ++row) at_mut(row, s) = -at(row, s);
}

void ActionMatrix::multiply_generator_left(const CoxeterContext& ctx, Generator s) {
  // Row s becomes -row s + sum_t 2cos(pi/m_st) row t.
  for (std::size_t col = 0; col < n_; ++col) {
    AlgebraicScalar v = -at(s, col);
    for (Generator t : ctx.neighbours(s)) v.add_product(ctx.coeff(s, t), at(t, col));
    at_mut(s, col) = std::move(v);
  }
}

Root ActionMatrix::apply(const Root& gamma) const {
  if (gamma.coords.size() != n_) throw Error("root dimension does not match the group rank");
  Root out;
  out.coords.assign(n_, AlgebraicScalar(entries_.front().field(), 0L));
  for (std::size_t col = 0; col < n_; ++col) {
    if (gamma.coords[col].is_zero()) continue;
    for (std::size_t row = 0; row < n_; ++row) {
      out.coords[row].add_product(gamma.coords[col], at(row, col));
    }
  }
  return out;
}

ActionMatrix operator*(const ActionMatrix& a, const ActionMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  ActionMatrix out;
  out.n_ = a.n_;
  out.entries_.reserve(a.entries_.size());
  for (std::size_t col = 0; col < b.n_; ++col) {
    Root c = a.apply(b.column(col));
    for (auto& x : c.coords) out.entries_.push_back(std::move(x));
  }
  return out;
}

std::string ActionMatrix::key() const {
  std::string out;
  for (const auto& e : entries_) {
    for (const auto& c : e.coeffs()) {
      out += c.get_str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

GroupElement GroupElement::identity(const ContextPtr& ctx) {
  auto id = ActionMatrix::identity(*ctx);
  return GroupElement(ctx, {}, id, id);
}

GroupElement GroupElement::generator(const ContextPtr& ctx, Generator s) {
  if (s >= ctx->rank()) throw Error("generator index out of range");
  auto m = ActionMatrix::identity(*ctx);
  m.multiply_generator_right(*ctx, s);
  return GroupElement(ctx, {s}, m, m);
}

GroupElement GroupElement::from_matrices(const ContextPtr& ctx, ActionMatrix matrix,
                                         ActionMatrix inverse) {
  Word word;
  // rest is the inverse of the not-yet-peeled suffix v; s is a left
  // descent of v iff v^-1 . alpha_s < 0.
  ActionMatrix rest = inverse;
  for (;;) {
    Generator next = rest.size();
    for (Generator s = 0; s < rest.size(); ++s) {
      if (rest.column_sign(s) < 0) {
        next = s;
        break;
      }
    }
    if (next == rest.size()) break;
    word.push_back(next);
    rest.multiply_generator_right(*ctx, next);
  }
  return GroupElement(ctx, std::move(word), std::move(matrix), std::move(inverse));
}

GroupElement normal_form(const ContextPtr& ctx, std::span<const Generator> word) {
  auto m = ActionMatrix::identity(*ctx);
  auto inv = m;
  for (Generator s : word) {
    if (s >= ctx->rank()) throw Error("generator index out of range");
    m.multiply_generator_right(*ctx, s);
    inv.multiply_generator_left(*ctx, s);
  }
  return GroupElement::from_matrices(ctx, std::move(m), std::move(inv));
}

namespace {

void check_same_context(const GroupElement& a, const GroupElement& b) {
  if (a.context() != b.context()) throw Error("group elements from different Coxeter systems");
}

}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_context(a, b);
  const auto& ctx = a.context();
  if (b.is_identity()) return a;
  if (a.is_identity()) return b;
  if (b.length() <= a.length()) {
    ActionMatrix m = a.matrix();
    ActionMatrix inv = a.inverse_matrix();
    for (Generator s : b.word()) {
      m.multiply_generator_right(*ctx, s);
      inv.multiply_generator_left(*ctx, s);
    }
    return GroupElement::from_matrices(ctx, std::move(m), std::move(inv));
  }
  ActionMatrix m = b.matrix();
  ActionMatrix inv = b.inverse_matrix();
  for (auto it = a.word().rbegin(); it != a.word().rend(); ++it) {
    m.multiply_generator_left(*ctx, *it);
    inv.multiply_generator_right(*ctx, *it);
  }
  return GroupElement::from_matrices(ctx, std::move(m), std::move(inv));
}

GroupElement multiply_generator_right(const GroupElement& a, Generator s) {
  const auto& ctx = a.context();
  if (s >= ctx->rank()) throw Error("generator index out of range");
  ActionMatrix m = a.matrix();
  ActionMatrix inv = a.inverse_matrix();
  m.multiply_generator_right(*ctx, s);
  inv.multiply_generator_left(*ctx, s);
  return GroupElement::from_matrices(ctx, std::move(m), std::move(inv));
}

GroupElement multiply_generator_left(Generator s, const GroupElement& a) {
  const auto& ctx = a.context();
  if (s >= ctx->rank()) throw Error("generator index out of range");
  ActionMatrix m = a.matrix();
  ActionMatrix inv = a.inverse_matrix();
  m.multiply_generator_left(*ctx, s);
  inv.multiply_generator_right(*ctx, s);
  return GroupElement::from_matrices(ctx, std::move(m), std::move(inv));
}

GroupElement inverse(const GroupElement& a) {
  return GroupElement::from_matrices(a.context(), a.inverse_matrix(), a.matrix());
}

GroupElement conjugate(const GroupElement& a, const GroupElement& b) {
  return multiply(multiply(a, b), inverse(a));
}

Root act(const GroupElement& w, const Root& gamma) { return w.matrix().apply(gamma); }

GeneratorSet right_descents(const GroupElement& w) {
  GeneratorSet out;
  for (Generator s = 0; s < w.context()->rank(); ++s) {
    if (w.matrix().column_sign(s) < 0) out.insert(s);
  }
  return out;
}

GeneratorSet left_descents(const GroupElement& w) {
  GeneratorSet out;
  for (Generator s = 0; s < w.context()->rank(); ++s) {
    if (w.inverse_matrix().column_sign(s) < 0) out.insert(s);
  }
  return out;
}

std::vector<Root> inversion_set(const GroupElement& w) {
  const auto& ctx = *w.context();
  std::vector<Root> out;
  out.reserve(w.length());
  ActionMatrix suffix = ActionMatrix::identity(ctx);
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    out.push_back(suffix.column(*it));
    suffix.multiply_generator_right(ctx, *it);
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t rank) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1 || value > rank) {
      throw Error("invalid generator index '" + std::string(token) + "' (expected 1.." +
                  std::to_string(rank) + ")");
    }
    out.push_back(value - 1);
    pos = end;
  }
  return out;
}

std::vector<std::size_t> to_one_based(GeneratorSet set) {
  std::vector<std::size_t> out;
  for (Generator s : set.members()) out.push_back(s + 1);
  return out;
}

}  // namespace coxcent
