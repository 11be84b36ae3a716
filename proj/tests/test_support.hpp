#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "coxcent/catalog.hpp"
#include "coxcent/group.hpp"

namespace testing_support {

using namespace coxcent;

inline ContextPtr context(const std::string& type) {
  return CoxeterContext::create(catalog_matrix(type));
}

inline GroupElement element(const ContextPtr& ctx, const std::string& word) {
  return normal_form(ctx, parse_word(word, ctx->rank()));
}

inline Root root(const ContextPtr& ctx, std::initializer_list<long> coords) {
  Root r;
  for (long c : coords) r.coords.emplace_back(ctx->field(), c);
  return r;
}

/// Positive roots of a finite group: closure of the simple roots under
/// simple reflections, keeping positive images.
inline std::vector<Root> positive_roots(const CoxeterContext& ctx, std::size_t cap = 100000) {
  std::vector<Root> out;
  std::map<std::string, bool> seen;
  for (Generator s = 0; s < ctx.rank(); ++s) {
    out.push_back(simple_root(ctx, s));
    seen[out.back().to_string()] = true;
  }
  for (std::size_t i = 0; i < out.size() && out.size() < cap; ++i) {
    for (Generator s = 0; s < ctx.rank(); ++s) {
      Root next = simple_reflection_action(ctx, s, out[i]);
      if (!is_positive(next)) continue;
      auto key = next.to_string();
      if (seen.emplace(key, true).second) out.push_back(std::move(next));
    }
  }
  return out;
}

/// Applies a braid move s t s ... = t s t ... (m letters) at a random spot
/// if one fits, else inserts "s s".
inline Word perturb(std::mt19937& rng, const CoxeterMatrix& m, Word w) {
  std::uniform_int_distribution<std::size_t> gen(0, m.rank() - 1);
  std::uniform_int_distribution<std::size_t> pos(0, w.size());
  const std::size_t s = gen(rng), t = gen(rng);
  const std::size_t at = pos(rng);
  if (s != t && m.label(s, t) != kInfiniteBond) {
    const std::size_t k = m.label(s, t);
    Word lhs, rhs;
    for (std::size_t i = 0; i < k; ++i) {
      lhs.push_back(i % 2 ? t : s);
      rhs.push_back(i % 2 ? s : t);
    }
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
        std::copy(rhs.begin(), rhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i));
        return w;
      }
    }
  }
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), {s, s});
  return w;
}

}  // namespace testing_support
