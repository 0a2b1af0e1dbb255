#pragma once

#include "cobord/rational.hpp"

#include <optional>
#include <vector>

namespace cobord::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant. Uses fraction-free Bareiss elimination over the
/// integers when every entry is integral, rational Gaussian elimination
/// otherwise. Row swaps tracked by sign; returns 0 for singular input.
Rational determinant_exact(const RationalMatrix& m);

/// Solves A·x = b exactly; returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace cobord::detail
