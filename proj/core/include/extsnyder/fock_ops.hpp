#pragma once

#include <utility>
#include <vector>

#include "extsnyder/operator.hpp"

namespace extsnyder {

enum class LadderKind { Lower, Raise };

/// a (Lower) or a^dagger (Raise) of one mode. The raising operator annihilates
/// states already at n_max.
Operator ladder(const BasisPtr& basis, const ModeId& mode, LadderKind kind);

/// a^dagger a of one mode.
Operator number_op(const BasisPtr& basis, const ModeId& mode);

struct CanonicalPair {
  Operator x;
  Operator p;
};

/// x = (a + a^dagger)/sqrt(2 m w), p = i sqrt(m w / 2) (a^dagger - a).
/// Throws ValidationError unless mass > 0 and freq > 0.
CanonicalPair canonical_pair(const BasisPtr& basis, const ModeId& mode, double mass, double freq);

/// Membership mask of the K-interior: every occupation <= n_max - K.
/// Throws ValidationError unless 0 <= K <= n_max.
std::vector<bool> interior_mask(const FockBasis& basis, int margin);

/// Diagonal projector onto the K-interior.
Operator interior_projector(const BasisPtr& basis, int margin);

/// max |<m|A|n>| with both m and n in the K-interior.
double interior_residual_norm(const Operator& op, int margin);

}  // namespace extsnyder
