#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "extsnyder/params.hpp"

namespace extsnyder {

/// One bosonic mode: a vector coordinate x_i or a tensor coordinate x_ij (i < j).
/// Indices are 1-based spatial indices.
struct ModeId {
  enum class Kind { Vector, Tensor };

  Kind kind = Kind::Vector;
  int i = 1;
  int j = 0;  // unused for vector modes

  static ModeId vector(int i) { return {Kind::Vector, i, 0}; }
  // Throws ValidationError unless 1 <= i < j.
  static ModeId tensor(int i, int j);

  bool is_vector() const { return kind == Kind::Vector; }
  bool is_tensor() const { return kind == Kind::Tensor; }

  // "v1", "t12"; spatial indices above 9 are separated by '_' ("t3_10").
  std::string label() const;

  auto operator<=>(const ModeId&) const = default;
};

/// Default cap on basis dimension; EXTSNYDER_DIM_CAP overrides it.
std::size_t default_dimension_cap();

/// Truncated product Fock space over D vector modes and D(D-1)/2 tensor modes.
///
/// Modes are ordered vector modes first, then tensor modes in lexicographic
/// (i, j) order. States are all occupation vectors in {0..n_max}^modes, listed
/// lexicographically with the first mode most significant, so index 0 is the
/// vacuum. Occupations are computed from the index on demand.
class FockBasis {
 public:
  // Throws ValidationError for bad params, DimensionError above `dimension_cap`.
  explicit FockBasis(const ModelParams& params, std::size_t dimension_cap = default_dimension_cap());

  const ModelParams& params() const { return params_; }
  int dim() const { return params_.dim; }
  int n_max() const { return params_.n_max; }
  std::size_t mode_count() const { return modes_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<ModeId>& modes() const { return modes_; }

  // Position of `mode` in the mode order; throws StructuralError if absent.
  std::size_t mode_index(const ModeId& mode) const;
  std::size_t vector_mode(int i) const;

  struct TensorSlot {
    std::size_t mode = 0;
    int sign = 0;  // +1 for i<j, -1 for i>j, 0 for i==j (mode is meaningless)
  };
  // Antisymmetric lookup of x_ij for any ordered pair of spatial indices.
  TensorSlot tensor_slot(int i, int j) const;

  std::size_t stride(std::size_t mode) const { return strides_[mode]; }
  int occupation(std::size_t state, std::size_t mode) const {
    return static_cast<int>((state / strides_[mode]) % radix_);
  }
  std::vector<int> occupations(std::size_t state) const;
  // Throws ValidationError on wrong length or out-of-range occupations.
  std::size_t index_of(std::span<const int> occupations) const;

  int total_occupation(std::size_t state) const;
  int max_occupation(std::size_t state) const;

  // Same D and n_max; operators on equal bases may be combined.
  bool same_space(const FockBasis& other) const {
    return params_.dim == other.params_.dim && params_.n_max == other.params_.n_max;
  }

 private:
  ModelParams params_;
  std::vector<ModeId> modes_;
  std::vector<std::size_t> strides_;
  std::size_t radix_ = 1;
  std::size_t dimension_ = 1;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Validating factory returning a shared handle.
BasisPtr enumerate_basis(const ModelParams& params,
                         std::size_t dimension_cap = default_dimension_cap());

}  // namespace extsnyder
