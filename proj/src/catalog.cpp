#include "coxcent/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace coxcent {

namespace {

std::optional<std::size_t> parse_number(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

using Rows = std::vector<std::vector<BondLabel>>;

void bond(Rows& rows, std::size_t s, std::size_t t, BondLabel m) {
  rows[s][t] = m;
  rows[t][s] = m;
}

Rows blank(std::size_t n) {
  Rows rows(n, std::vector<BondLabel>(n, 2));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

}  // namespace

std::string CoxeterType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
    case Family::ATilde: return "Atilde" + std::to_string(rank - 1);
  }
  return "?";
}

CoxeterType parse_type_name(std::string_view name) {
  auto fail = [&](const std::string& why) -> CoxeterType {
    throw Error("unknown Coxeter type '" + std::string(name) + "': " + why);
  };
  if (name.starts_with("I2(") && name.ends_with(")")) {
    auto m = parse_number(name.substr(3, name.size() - 4));
    if (!m || *m < 2) return fail("I2(m) needs a finite m >= 2");
    return {Family::I2, 2, static_cast<BondLabel>(*m)};
  }
  if (name.starts_with("Atilde")) {
    auto n = parse_number(name.substr(6));
    if (!n || *n < 1) return fail("Atilde<n> needs n >= 1");
    return {Family::ATilde, *n + 1, 0};
  }
  if (name.size() < 2) return fail("expected a family letter followed by a rank");
  auto n = parse_number(name.substr(1));
  if (!n) return fail("rank is not a number");
  switch (name[0]) {
    case 'A':
      if (*n < 1) return fail("A<n> needs n >= 1");
      return {Family::A, *n, 0};
    case 'B':
      if (*n < 2) return fail("B<n> needs n >= 2");
      return {Family::B, *n, 0};
    case 'D':
      if (*n < 4) return fail("D<n> needs n >= 4");
      return {Family::D, *n, 0};
    case 'E':
      if (*n < 6 || *n > 8) return fail("E<n> exists for n = 6, 7, 8");
      return {Family::E, *n, 0};
    case 'F':
      if (*n != 4) return fail("only F4 exists");
      return {Family::F, 4, 0};
    case 'H':
      if (*n != 3 && *n != 4) return fail("H<n> exists for n = 3, 4");
      return {Family::H, *n, 0};
    default:
      return fail("unknown family");
  }
}

CoxeterMatrix catalog_matrix(const CoxeterType& type) {
  const std::size_t n = type.rank;
  Rows rows = blank(n);
  switch (type.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) bond(rows, i, i + 1, 3);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) bond(rows, i, i + 1, 3);
      bond(rows, n - 2, n - 1, 4);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) bond(rows, i, i + 1, 3);
      bond(rows, n - 3, n - 1, 3);
      break;
    case Family::E:
      bond(rows, 0, 2, 3);
      bond(rows, 1, 3, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) bond(rows, i, i + 1, 3);
      break;
    case Family::F:
      bond(rows, 0, 1, 3);
      bond(rows, 1, 2, 4);
      bond(rows, 2, 3, 3);
      break;
    case Family::H:
      bond(rows, 0, 1, 5);
      for (std::size_t i = 1; i + 1 < n; ++i) bond(rows, i, i + 1, 3);
      break;
    case Family::I2:
      bond(rows, 0, 1, type.m);
      break;
    case Family::ATilde:
      if (n == 2) {
        bond(rows, 0, 1, kInfiniteBond);
      } else {
        for (std::size_t i = 0; i < n; ++i) bond(rows, i, (i + 1) % n, 3);
      }
      break;
  }
  return CoxeterMatrix(std::move(rows));
}

std::vector<std::vector<std::size_t>> diagram_components(const CoxeterMatrix& matrix,
                                                         const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> seen(matrix.rank(), false);
  std::vector<bool> allowed(matrix.rank(), false);
  for (auto v : sorted) allowed[v] = true;
  std::vector<std::vector<std::size_t>> out;
  for (auto start : sorted) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t t = 0; t < matrix.rank(); ++t) {
        if (allowed[t] && !seen[t] && matrix.is_edge(comp[i], t)) {
          seen[t] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Walks from `from` away from `prev` along a chain of degree-2 nodes.
std::vector<std::size_t> walk_arm(const std::vector<std::vector<std::size_t>>& adj,
                                  std::size_t prev, std::size_t from) {
  std::vector<std::size_t> arm{from};
  while (adj[arm.back()].size() == 2) {
    const auto& nb = adj[arm.back()];
    const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = arm.back();
    arm.push_back(next);
  }
  return arm;
}

std::optional<FiniteTypeMatch> classify(const CoxeterMatrix& g) {
  const std::size_t k = g.rank();
  if (k == 1) return FiniteTypeMatch{{Family::A, 1, 0}, {0}};
  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (!g.is_edge(s, t)) continue;
      if (g.is_infinite_bond(s, t)) return std::nullopt;
      adj[s].push_back(t);
      if (s < t) ++edges;
    }
  }
  if (k == 2) {
    const BondLabel m = g.label(0, 1);
    if (m == 3) return FiniteTypeMatch{{Family::A, 2, 0}, {0, 1}};
    if (m == 4) return FiniteTypeMatch{{Family::B, 2, 0}, {0, 1}};
    return FiniteTypeMatch{{Family::I2, 2, m}, {0, 1}};
  }
  if (edges != k - 1) return std::nullopt;  // contains a cycle
  std::vector<std::size_t> branch;
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < k; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
    if (adj[v].size() == 1) ends.push_back(v);
  }

  if (branch.empty()) {
    // Path: read labels from one end.
    std::vector<std::size_t> path = walk_arm(adj, ends[0], adj[ends[0]][0]);
    path.insert(path.begin(), ends[0]);
    std::vector<BondLabel> labels;
    for (std::size_t i = 0; i + 1 < k; ++i) labels.push_back(g.label(path[i], path[i + 1]));
    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != 3) heavy.push_back(i);
    if (heavy.empty()) return FiniteTypeMatch{{Family::A, k, 0}, path};
    if (heavy.size() > 1) return std::nullopt;
    const std::size_t pos = heavy[0];
    const BondLabel m = labels[pos];
    const bool at_end = pos == 0 || pos == k - 2;
    if (m == 4 && at_end) {
      if (pos == 0) std::reverse(path.begin(), path.end());
      return FiniteTypeMatch{{Family::B, k, 0}, path};
    }
    if (m == 4 && k == 4 && pos == 1) return FiniteTypeMatch{{Family::F, 4, 0}, path};
    if (m == 5 && at_end && (k == 3 || k == 4)) {
      if (pos != 0) std::reverse(path.begin(), path.end());
      return FiniteTypeMatch{{Family::H, k, 0}, path};
    }
    return std::nullopt;
  }

  if (branch.size() != 1) return std::nullopt;
  for (std::size_t s = 0; s < k; ++s)
    for (auto t : adj[s])
      if (g.label(s, t) != 3) return std::nullopt;
  const std::size_t b = branch[0];
  std::vector<std::vector<std::size_t>> arms;
  for (auto start : adj[b]) arms.push_back(walk_arm(adj, b, start));
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
  std::vector<std::size_t> order;
  if (a1 == 1 && a2 == 1) {
    // D_n: long arm (far end first), branch node, then the two leaves.
    order.assign(arms[2].rbegin(), arms[2].rend());
    order.push_back(b);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return FiniteTypeMatch{{Family::D, k, 0}, order};
  }
  if (a1 == 1 && a2 == 2 && a3 >= 2 && a3 <= 4) {
    // E_n: 1 = far end of the 2-arm, 2 = leaf, 3 = near node of the 2-arm,
    // 4 = branch, then the long arm outward.
    order = {arms[1][1], arms[0][0], arms[1][0], b};
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    return FiniteTypeMatch{{Family::E, k, 0}, order};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FiniteTypeMatch> recognize_finite_type(const CoxeterMatrix& connected) {
  auto match = classify(connected);
  if (match && connected.restricted(match->order) != catalog_matrix(match->type)) {
    throw InvariantViolation("diagram recognised as " + match->type.name() +
                             " does not match the catalog matrix");
  }
  return match;
}

}  // namespace coxcent
