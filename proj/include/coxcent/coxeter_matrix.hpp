#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (e.g. a computed root
/// with mixed-sign coordinates). Always indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Bond label of a Coxeter matrix. Label 0 stands for an infinite bond.
using BondLabel = std::uint32_t;
inline constexpr BondLabel kInfiniteBond = 0;

/// Symmetric Coxeter matrix with 1 on the diagonal and labels in
/// {2, 3, ...} or 0 (infinity) off the diagonal. Validated on construction.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::vector<BondLabel>> rows);

  std::size_t rank() const { return rank_; }
  BondLabel label(std::size_t s, std::size_t t) const { return labels_[s * rank_ + t]; }
  bool is_infinite_bond(std::size_t s, std::size_t t) const {
    return s != t && label(s, t) == kInfiniteBond;
  }
  /// Edge of the Coxeter diagram: label >= 3 or infinite.
  bool is_edge(std::size_t s, std::size_t t) const {
    return s != t && (label(s, t) == kInfiniteBond || label(s, t) >= 3);
  }

  std::vector<std::vector<BondLabel>> rows() const;

  /// Restriction to the given generators, in the given order.
  CoxeterMatrix restricted(const std::vector<std::size_t>& generators) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<BondLabel> labels_;
};

}  // namespace coxcent
