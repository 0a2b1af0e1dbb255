#pragma once

#include "cobord/geometry.hpp"
#include "cobord/pairing.hpp"
#include "cobord/partitions.hpp"

#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

namespace cobord {

/// Coefficients of a class in the φ(λ,μ) basis, in canonical order with
/// zero coefficients omitted.
using Decomposition = std::vector<std::pair<PartitionPair, Rational>>;

/// Solves Σ x_{(λ,μ)}·ρ(φ(λ,μ), Θ) = target(Θ) for all monomials Θ, i.e.
/// the transposed system against the cached M_{n,r}. The system is
/// nonsingular for every (n, r); a singular solve signals an internal
/// inconsistency and throws std::logic_error.
Decomposition decompose(const ChernVector& target,
                        const std::optional<std::filesystem::path>& cache_dir = std::nullopt);
Decomposition decompose(const ClassSpec& c,
                        const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// Σ x·chern_vector(φ(λ,μ)) for a coefficient association.
ChernVector reconstruct(const Decomposition& d, int n, int r);

/// [Y1,E1]·[Y2,E2] = [Y1×Y2, E1⊠E2]: bases and levels concatenate, line
/// classes are all pairwise sums, rank multiplies, dimension adds. Both
/// factors must be pure towers (no fundamental multiplier).
GeneratorSpec external_product(const GeneratorSpec& g1, const GeneratorSpec& g2);

/// Decomposition of [P^a×P^b, O(1,1)] in the rank-1 basis of dimension
/// a+b; the result is re-verified against the input Chern vector.
Decomposition question(int a, int b,
                       const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace cobord
