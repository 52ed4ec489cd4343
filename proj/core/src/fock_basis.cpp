#include "extsnyder/fock_basis.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

constexpr std::size_t kDefaultDimensionCap = 2'000'000;

std::string index_text(int i, int j) {
  if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

ModeId ModeId::tensor(int i, int j) {
  if (i < 1 || j <= i) {
    throw ValidationError("tensor mode requires 1 <= i < j, got (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  }
  return {Kind::Tensor, i, j};
}

std::string ModeId::label() const {
  if (is_vector()) return "v" + std::to_string(i);
  return "t" + index_text(i, j);
}

std::size_t default_dimension_cap() {
  const char* env = std::getenv("EXTSNYDER_DIM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDimensionCap;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0' || v == 0) {
    throw ValidationError(std::string("EXTSNYDER_DIM_CAP: not a positive integer: ") + env);
  }
  return static_cast<std::size_t>(v);
}

FockBasis::FockBasis(const ModelParams& params, std::size_t dimension_cap) : params_(params) {
  if (params.dim < 2) throw ValidationError("d: spatial dimension must be >= 2");
  if (params.n_max < 0) throw ValidationError("n_max: must be >= 0");

  for (int i = 1; i <= params.dim; ++i) modes_.push_back(ModeId::vector(i));
  for (int i = 1; i <= params.dim; ++i)
    for (int j = i + 1; j <= params.dim; ++j) modes_.push_back(ModeId::tensor(i, j));

  radix_ = static_cast<std::size_t>(params.n_max) + 1;
  dimension_ = 1;
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (dimension_ > dimension_cap / radix_) {
      throw DimensionError("truncation too large for desk scale: (n_max+1)^" +
                           std::to_string(modes_.size()) + " exceeds the dimension cap " +
                           std::to_string(dimension_cap));
    }
    dimension_ *= radix_;
  }
  if (dimension_ > dimension_cap) {
    throw DimensionError("truncation too large for desk scale: dimension " +
                         std::to_string(dimension_) + " exceeds the cap " +
                         std::to_string(dimension_cap));
  }

  strides_.assign(modes_.size(), 1);
  for (std::size_t k = modes_.size(); k-- > 1;) strides_[k - 1] = strides_[k] * radix_;
}

std::size_t FockBasis::mode_index(const ModeId& mode) const {
  const auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) throw StructuralError("mode " + mode.label() + " is not in the basis");
  return static_cast<std::size_t>(it - modes_.begin());
}

std::size_t FockBasis::vector_mode(int i) const {
  if (i < 1 || i > params_.dim) {
    throw StructuralError("vector index " + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i - 1);
}

FockBasis::TensorSlot FockBasis::tensor_slot(int i, int j) const {
  const int d = params_.dim;
  if (i < 1 || i > d || j < 1 || j > d) {
    throw StructuralError("tensor index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range");
  }
  if (i == j) return {0, 0};
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  // Pairs (a, b) with a < lo come first: sum_{a<lo} (d - a).
  std::size_t pos = static_cast<std::size_t>(d);
  for (int a = 1; a < lo; ++a) pos += static_cast<std::size_t>(d - a);
  pos += static_cast<std::size_t>(hi - lo - 1);
  return {pos, i < j ? 1 : -1};
}

std::vector<int> FockBasis::occupations(std::size_t state) const {
  std::vector<int> occ(modes_.size());
  for (std::size_t k = 0; k < modes_.size(); ++k) occ[k] = occupation(state, k);
  return occ;
}

std::size_t FockBasis::index_of(std::span<const int> occupations) const {
  if (occupations.size() != modes_.size()) {
    throw ValidationError("occupation vector has " + std::to_string(occupations.size()) +
                          " entries, basis has " + std::to_string(modes_.size()) + " modes");
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    const int n = occupations[k];
    if (n < 0 || n > params_.n_max) {
      throw ValidationError("occupation " + std::to_string(n) + " of mode " + modes_[k].label() +
                            " outside [0, n_max]");
    }
    idx += static_cast<std::size_t>(n) * strides_[k];
  }
  return idx;
}

int FockBasis::total_occupation(std::size_t state) const {
  int total = 0;
  for (std::size_t k = 0; k < modes_.size(); ++k) total += occupation(state, k);
  return total;
}

int FockBasis::max_occupation(std::size_t state) const {
  int best = 0;
  for (std::size_t k = 0; k < modes_.size(); ++k) best = std::max(best, occupation(state, k));
  return best;
}

BasisPtr enumerate_basis(const ModelParams& params, std::size_t dimension_cap) {
  params.validate();
  return std::make_shared<const FockBasis>(params, dimension_cap);
}

}  // namespace extsnyder
