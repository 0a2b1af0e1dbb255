#pragma once

#include "cobord/geometry.hpp"
#include "cobord/partitions.hpp"
#include "cobord/rational.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace cobord {

/// Pairing matrix M_{n,r}: rows and columns indexed by the canonical
/// monomial order; entry[q][q'] = ρ(φ(ε(q)), monomial q').
struct PairingMatrix {
    int n = 0;
    int r = 0;
    std::vector<MonomialIndex> index;
    std::vector<std::vector<Rational>> rows;

    bool operator==(const PairingMatrix&) const = default;
};

PairingMatrix build_matrix(int n, int r);

struct TriangularViolation {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational value;
};
struct TriangularReport {
    bool passed = true;
    std::vector<TriangularViolation> violations;
};
/// Entries with row v-degree strictly below column v-degree must vanish
/// (block lower triangularity); every non-zero such entry is reported.
TriangularReport verify_block_triangular(const PairingMatrix& m);

struct BlockMismatch {
    Partition mu;
    std::size_t row = 0;  // positions within the block
    std::size_t col = 0;
    Rational got;
    Rational expected;
};
struct BlockReport {
    bool passed = true;
    std::vector<BlockMismatch> mismatches;
};
/// Each diagonal μ-block must equal M_{n−|μ|,0} entrywise under (ν,μ) ↦ ν.
BlockReport verify_diagonal_blocks(const PairingMatrix& m);

/// Exact determinant (fraction-free over the integers when possible).
Rational determinant(const PairingMatrix& m);

/// |P_{n,r}| = |Q_{n,r}| = Σ over κ with ℓ(κ) ≤ r, |κ| ≤ n of p(n−|κ|).
bool dimension_identity(int n, int r);

/// Cache directory: $COBORD_CACHE_DIR if set, else "cobord-cache" beside
/// the working directory.
std::filesystem::path default_cache_dir();

/// Loads M_{n,r} from dir when a valid cache file exists, else builds it
/// and stores it (write-then-rename, so concurrent readers never see a
/// partial file).
PairingMatrix build_matrix_cached(int n, int r,
                                  const std::optional<std::filesystem::path>& dir = std::nullopt);

}  // namespace cobord
