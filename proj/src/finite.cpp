#include "coxcent/finite.hpp"

#include <algorithm>
#include <numeric>

namespace coxcent {

std::string word_key(const Word& word) {
  std::string key;
  key.reserve(word.size());
  for (Generator s : word) key.push_back(static_cast<char>(s));
  return key;
}

ElementSet::ElementSet(std::vector<GroupElement> elements, std::optional<bool> closed_under_inverse)
    : elements_(std::move(elements)), closed_under_inverse_(closed_under_inverse) {
  std::sort(elements_.begin(), elements_.end(), [](const GroupElement& a, const GroupElement& b) {
    return shortlex_less(a.word(), b.word());
  });
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(word_key(elements_[i].word()), i);
}

FiniteGroup::Index FiniteGroup::index_of(const GroupElement& g) const {
  if (g.context() != ctx_) throw Error("element belongs to a different Coxeter system");
  auto idx = find(g.word());
  if (!idx) throw InvariantViolation("element [" + format_word(g.word()) + "] is not enumerated");
  return *idx;
}

std::optional<FiniteGroup::Index> FiniteGroup::find(const Word& normal_form_word) const {
  auto it = by_word_.find(word_key(normal_form_word));
  if (it == by_word_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup::Index FiniteGroup::product(Index a, Index b) const {
  Index x = a;
  for (Generator s : elements_[b].word()) x = right(x, s);
  return x;
}

FiniteGroup::Index FiniteGroup::conjugate(Index a, Index b) const {
  return product(product(a, b), inverse(a));
}

ElementSet FiniteGroup::subset(const std::vector<Index>& members, std::optional<bool> closed) const {
  std::vector<GroupElement> out;
  out.reserve(members.size());
  for (Index i : members) out.push_back(elements_[i]);
  return ElementSet(std::move(out), closed);
}

FiniteGroup enumerate_group(const ContextPtr& ctx, std::size_t cap) {
  const std::size_t n = ctx->rank();
  struct Node {
    Word word;
    ActionMatrix matrix;
    ActionMatrix inverse;
  };
  // Breadth-first by length: t y is new with normal form t + NF(y) exactly
  // when t is the least left descent of t y, so each element is produced
  // once from its ShortLex tail.
  std::vector<Node> found;
  std::unordered_map<std::string, std::size_t> seen;
  auto id = ActionMatrix::identity(*ctx);
  found.push_back({{}, id, id});
  seen.emplace("", 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Generator t = 0; t < n; ++t) {
      if (found[i].inverse.column_sign(t) < 0) continue;
      ActionMatrix inv = found[i].inverse;
      inv.multiply_generator_right(*ctx, t);
      Generator least = n;
      for (Generator s = 0; s < t; ++s) {
        if (inv.column_sign(s) < 0) {
          least = s;
          break;
        }
      }
      if (least < t) continue;
      Word word;
      word.reserve(found[i].word.size() + 1);
      word.push_back(t);
      word.insert(word.end(), found[i].word.begin(), found[i].word.end());
      if (!seen.emplace(word_key(word), found.size()).second) {
        throw InvariantViolation("enumeration produced [" + format_word(word) + "] twice");
      }
      if (found.size() >= cap) throw CapExceeded(cap);
      ActionMatrix m = found[i].matrix;
      m.multiply_generator_left(*ctx, t);
      found.push_back({std::move(word), std::move(m), std::move(inv)});
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shortlex_less(found[a].word, found[b].word);
  });

  FiniteGroup group;
  group.ctx_ = ctx;
  group.rank_ = n;
  group.elements_.reserve(found.size());
  std::unordered_map<std::string, FiniteGroup::Index> by_matrix;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Node& node = found[order[pos]];
    const auto idx = static_cast<FiniteGroup::Index>(pos);
    group.by_word_.emplace(word_key(node.word), idx);
    by_matrix.emplace(node.matrix.key(), idx);
    group.elements_.push_back(
        GroupElement(ctx, std::move(node.word), std::move(node.matrix), std::move(node.inverse)));
  }
  found.clear();

  const std::size_t size = group.elements_.size();
  auto lookup = [&](const ActionMatrix& m) {
    auto it = by_matrix.find(m.key());
    if (it == by_matrix.end()) throw InvariantViolation("product left the enumerated group");
    return it->second;
  };
  group.right_.resize(size * n);
  group.inverse_.resize(size);
  for (std::size_t g = 0; g < size; ++g) {
    group.inverse_[g] = lookup(group.elements_[g].inverse_matrix());
    for (Generator s = 0; s < n; ++s) {
      ActionMatrix m = group.elements_[g].matrix();
      m.multiply_generator_right(*ctx, s);
      group.right_[g * n + s] = lookup(m);
    }
  }
  group.left_.resize(size * n);
  for (std::size_t g = 0; g < size; ++g) {
    for (Generator s = 0; s < n; ++s) {
      group.left_[g * n + s] = group.inverse_[group.right(group.inverse_[g], s)];
    }
  }
  return group;
}

namespace {

std::vector<FiniteGroup::Index> centralizer_indices(FiniteGroup::Index w, const FiniteGroup& group) {
  std::vector<FiniteGroup::Index> out;
  for (FiniteGroup::Index g = 0; g < group.size(); ++g) {
    if (group.product(g, w) == group.product(w, g)) out.push_back(g);
  }
  return out;
}

std::vector<FiniteGroup::Index> normalizer_indices(GeneratorSet I, const FiniteGroup& group) {
  const auto gens = I.members();
  std::vector<FiniteGroup::Index> out;
  for (FiniteGroup::Index g = 0; g < group.size(); ++g) {
    const bool keeps = std::all_of(gens.begin(), gens.end(), [&](Generator s) {
      const auto x = group.product(group.right(g, s), group.inverse(g));
      const Word& word = group.element(x).word();
      return std::all_of(word.begin(), word.end(), [&](Generator t) { return I.contains(t); });
    });
    if (keeps) out.push_back(g);
  }
  return out;
}

}  // namespace

ElementSet centralizer(const GroupElement& w, const FiniteGroup& group) {
  return group.subset(centralizer_indices(group.index_of(w), group), true);
}

ElementSet normalizer(GeneratorSet I, const FiniteGroup& group) {
  if (!is_finite_parabolic(I, *group.context())) throw Error("parabolic subgroup is infinite");
  return group.subset(normalizer_indices(I, group), true);
}

bool verify_prop2(GeneratorSet I, const FiniteGroup& group) {
  if (!is_minus_one_type(I, group.context())) {
    throw Error("subset is not of (-1)-type");
  }
  const auto rho = group.index_of(longest_element(I, group.context()));
  return centralizer_indices(rho, group) == normalizer_indices(I, group);
}

bool verify_main_identity(const GroupElement& w, const FiniteGroup& group) {
  const InvolutionCertificate cert = richardson_descent(w);
  if (!cert.verification.ok()) return false;
  const auto u = group.index_of(cert.u);
  const auto u_inv = group.inverse(u);
  std::vector<FiniteGroup::Index> conjugated;
  for (auto g : normalizer_indices(cert.I, group)) {
    conjugated.push_back(group.product(group.product(u_inv, g), u));
  }
  std::sort(conjugated.begin(), conjugated.end());
  return conjugated == centralizer_indices(group.index_of(w), group);
}

std::vector<GroupElement> involutions(const FiniteGroup& group) {
  std::vector<GroupElement> out;
  for (FiniteGroup::Index g = 0; g < group.size(); ++g) {
    if (group.product(g, g) == 0) out.push_back(group.element(g));
  }
  return out;
}

std::vector<InvolutionClass> involution_classes(const FiniteGroup& group) {
  const auto& ctx = group.context();
  std::vector<bool> visited(group.size(), false);
  std::vector<InvolutionClass> out;
  for (FiniteGroup::Index start = 0; start < group.size(); ++start) {
    if (visited[start] || group.product(start, start) != 0) continue;
    std::vector<FiniteGroup::Index> orbit{start};
    visited[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Generator s = 0; s < ctx->rank(); ++s) {
        const auto next = group.left(s, group.right(orbit[i], s));
        if (!visited[next]) {
          visited[next] = true;
          orbit.push_back(next);
        }
      }
    }
    const GroupElement& rep = group.element(start);
    InvolutionCertificate cert = richardson_descent(rep);
    ElementSet members = group.subset(orbit, true);
    const bool contains_rho =
        cert.verification.minus_one_type && members.contains(longest_element(cert.I, ctx));
    out.push_back({std::move(members), rep, std::move(cert), contains_rho});
  }
  return out;
}

std::vector<GeneratorSet> minus_one_type_subsets(const ContextPtr& ctx) {
  if (ctx->rank() > 20) throw Error("rank too large to list all subsets");
  std::vector<GeneratorSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ctx->rank()); ++bits) {
    if (is_minus_one_type(GeneratorSet(bits), ctx)) out.emplace_back(bits);
  }
  return out;
}

}  // namespace coxcent
