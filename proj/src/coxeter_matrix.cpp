#include "coxcent/coxeter_matrix.hpp"

namespace coxcent {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<BondLabel>> rows) : rank_(rows.size()) {
  if (rank_ == 0) throw Error("Coxeter matrix must have rank at least 1");
  if (rank_ > 64) throw Error("Coxeter matrix rank above 64 is not supported");
  labels_.reserve(rank_ * rank_);
  for (std::size_t s = 0; s < rank_; ++s) {
    if (rows[s].size() != rank_) {
      throw Error("Coxeter matrix row " + std::to_string(s + 1) + " has " +
                  std::to_string(rows[s].size()) + " entries, expected " + std::to_string(rank_));
    }
    for (std::size_t t = 0; t < rank_; ++t) labels_.push_back(rows[s][t]);
  }
  for (std::size_t s = 0; s < rank_; ++s) {
    if (label(s, s) != 1) {
      throw Error("Coxeter matrix diagonal entry " + std::to_string(s + 1) + " must be 1");
    }
    for (std::size_t t = s + 1; t < rank_; ++t) {
      if (label(s, t) != label(t, s)) {
        throw Error("Coxeter matrix is not symmetric at (" + std::to_string(s + 1) + "," +
                    std::to_string(t + 1) + ")");
      }
      if (label(s, t) == 1) {
        throw Error("off-diagonal Coxeter label 1 at (" + std::to_string(s + 1) + "," +
                    std::to_string(t + 1) + "); use 0 for infinity");
      }
    }
  }
}

std::vector<std::vector<BondLabel>> CoxeterMatrix::rows() const {
  std::vector<std::vector<BondLabel>> out(rank_, std::vector<BondLabel>(rank_));
  for (std::size_t s = 0; s < rank_; ++s)
    for (std::size_t t = 0; t < rank_; ++t) out[s][t] = label(s, t);
  return out;
}

CoxeterMatrix CoxeterMatrix::restricted(const std::vector<std::size_t>& generators) const {
  std::vector<std::vector<BondLabel>> out(generators.size(),
                                          std::vector<BondLabel>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j)
      out[i][j] = label(generators[i], generators[j]);
  return CoxeterMatrix(std::move(out));
}

}  // namespace coxcent
