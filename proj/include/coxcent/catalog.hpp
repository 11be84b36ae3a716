#pragma once

// Named Coxeter types and recognition of finite-type diagrams.
//
// Labelling follows Bourbaki: B_n has its 4-bond between n-1 and n, D_n
// branches at n-2, E_n is 1-3-4-5-...-n with 2 attached to 4, F4 is
// 1-2=3-4, H_n has its 5-bond between 1 and 2. Atilde_n is the (n+1)-cycle
// (two nodes joined by an infinite bond for n = 1).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxcent/coxeter_matrix.hpp"

namespace coxcent {

enum class Family { A, B, D, E, F, H, I2, ATilde };

struct CoxeterType {
  Family family = Family::A;
  std::size_t rank = 1;
  /// Bond label for I2(m); unused otherwise.
  BondLabel m = 0;

  std::string name() const;
  bool is_finite() const { return family != Family::ATilde; }
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Parses A<n>, B<n>, D<n>, E6|E7|E8, F4, H3|H4, I2(<m>), Atilde<n>.
/// Throws Error on an unknown name or an out-of-range parameter.
CoxeterType parse_type_name(std::string_view name);

/// The Coxeter matrix of a named type.
CoxeterMatrix catalog_matrix(const CoxeterType& type);
inline CoxeterMatrix catalog_matrix(std::string_view name) {
  return catalog_matrix(parse_type_name(name));
}

/// A connected diagram recognised as a finite catalog type. order[i] is the
/// node of the input matrix playing the role of catalog node i.
struct FiniteTypeMatch {
  CoxeterType type;
  std::vector<std::size_t> order;
};

/// Recognises a connected Coxeter matrix as a finite type, or returns
/// nullopt when the group it defines is infinite. The match is confirmed
/// against catalog_matrix before it is returned.
std::optional<FiniteTypeMatch> recognize_finite_type(const CoxeterMatrix& connected);

/// Connected components of the Coxeter diagram restricted to `nodes`,
/// each sorted ascending, ordered by least member.
std::vector<std::vector<std::size_t>> diagram_components(const CoxeterMatrix& matrix,
                                                         const std::vector<std::size_t>& nodes);

}  // namespace coxcent
