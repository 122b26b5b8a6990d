#pragma once

#include <span>

#include "dfsion/core/state.hpp"
#include "dfsion/core/unitary.hpp"

namespace dfsion {

// Applies `u` to the listed subsystems of `s`, identity elsewhere. The first
// entry of `targets` is the most significant bit of u's index.
//
// Throws DimensionError when dim(u) != 2^targets.size(), a target is out of
// range, or targets repeat.
PureState apply(const Unitary& u, const PureState& s, std::span<const int> targets);

inline PureState apply(const Unitary& u, const PureState& s, std::initializer_list<int> targets) {
  return apply(u, s, std::span<const int>(targets.begin(), targets.size()));
}

}  // namespace dfsion
