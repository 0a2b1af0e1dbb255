#pragma once

#include "cobord/geometry.hpp"
#include "cobord/partitions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cobord {

// Sign conventions, fixed once globally and regression-tested by the
// vanishing suite: ξ = c_1(O(1)) on P(O⊕N), relation ξ² = −c_1(N)·ξ,
// pushdown(ξ) = 1, and a "(−1)" twist by the exceptional divisor
// subtracts ξ from the line class.

/// Four-term class on P(B), B = O⊕N over P^λ with c_1(N) = nclass:
///   [P(B), L(−1)] − [P(B), L⊗N] + [P(B), L⊗N(1)] − [P(B), L]
/// (every L abbreviating the list of line classes). Dimension |λ|+1.
ClassSpec projective_bundle_relation(const Partition& lambda, const LinearForm& nclass,
                                     const std::vector<LinearForm>& lines);

/// Four-term class
///   [P(B), L] − [P(B), L(1)] − [P(O⊕N*), L(−1)] + [P(B), L⊗N*],
/// the third term living on the tower with level class −nclass.
ClassSpec first_bundle_relation(const Partition& lambda, const LinearForm& nclass,
                                const std::vector<LinearForm>& lines);

/// Degeneration to the normal cone of the hypersurface Z ⊂ P^λ of class
/// zclass:
///   [Y, L] − [Y, L(Z)] − [P(O_Z⊕O_Z(Z)), L(−1)] + [P(O_Z⊕O_Z(Z)), L(Z)],
/// the last two terms on the one-level tower over Y cut by zclass.
/// Dimension |λ|.
ClassSpec normal_cone_relation(const Partition& lambda, const LinearForm& zclass,
                               const std::vector<LinearForm>& lines);

struct VanishingReport {
    bool passed = true;
    std::vector<std::pair<MonomialIndex, Rational>> nonzero;
};
/// Passes iff every Chern invariant of the class vanishes; all non-zero
/// entries are listed with their monomials.
VanishingReport verify_vanishing(const ClassSpec& c, EngineCache* cache = nullptr);

enum class RelationFamily { ProjectiveBundle, FirstBundle, NormalCone };
const char* family_name(RelationFamily f);

struct RelationCase {
    RelationFamily family;
    Partition lambda;
    LinearForm divisor_class;  // nclass / zclass
    std::vector<LinearForm> lines;
    std::string str() const;
};

struct SuiteReport {
    std::uint64_t cases = 0;
    std::uint64_t passes = 0;
    std::vector<std::pair<RelationCase, VanishingReport>> failures;
    bool passed() const { return failures.empty(); }
};

/// Exhaustive vanishing sweep of one family up to class dimension
/// max_dim: bundle families run all λ with |λ| ≤ max_dim−1, N-class
/// coefficients in {−2..2}; the normal-cone family runs all |λ| ≤ max_dim
/// with Z = d·h on one factor, 1 ≤ d ≤ 3. All families take 0–2 line
/// classes with coefficients in {−1,0,1}. Cases run in parallel.
SuiteReport run_relation_suite(RelationFamily family, int max_dim);

}  // namespace cobord
