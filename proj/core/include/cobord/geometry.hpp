#pragma once

#include "cobord/partitions.hpp"
#include "cobord/rational.hpp"
#include "cobord/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cobord {

/// Ambient geometric space: a product of projective spaces P^{base},
/// a stack of P(O⊕N_j) bundle stages (one ξ generator each), and an
/// optional degree-1 fundamental multiplier F. When F is present the
/// space is the hypersurface of class F inside the ambient tower, and
/// every integral over it is computed ambiently as ∫ F·(...).
struct SpaceTower {
    std::vector<int> base;               // factor dimensions, order preserved
    std::vector<LinearForm> levels;      // c_1(N_j), over earlier generators
    std::optional<LinearForm> multiplier;  // hypersurface class, degree 1
    RingPtr ring;

    static SpaceTower projective(const Partition& lambda);
    static SpaceTower make(std::vector<int> base, std::vector<LinearForm> levels = {},
                           std::optional<LinearForm> multiplier = std::nullopt);

    int dimension() const;
    bool operator==(const SpaceTower& o) const {
        return base == o.base && levels == o.levels && multiplier == o.multiplier;
    }
};

/// A geometric generator [Y, E]: tower space Y plus a split rank-r bundle
/// E given by the first Chern classes of its line factors (the zero form
/// encodes a trivial factor).
struct GeneratorSpec {
    SpaceTower space;
    std::vector<LinearForm> lines;

    int rank() const { return static_cast<int>(lines.size()); }
    int dimension() const { return space.dimension(); }
    bool operator==(const GeneratorSpec&) const = default;
};

/// Formal Q-linear combination of generators, homogeneous in dimension n
/// and rank r.
struct ClassSpec {
    int n = 0;
    int r = 0;
    std::vector<std::pair<Rational, GeneratorSpec>> terms;

    static ClassSpec zero(int n, int r) { return {n, r, {}}; }
    void add(Rational coeff, GeneratorSpec generator);
    void validate() const;  // throws on any dimension/rank mismatch
};

/// All Chern invariants of a class, indexed by the canonical monomial
/// order of enumerate_monomials(n, r).
struct ChernVector {
    int n = 0;
    int r = 0;
    std::vector<Rational> values;

    bool is_zero() const;
    bool operator==(const ChernVector&) const = default;
};

/// Total Chern class of the tangent bundle of the (restricted) tower:
/// ∏(1+h_i)^{λ_i+1} · ∏(1+ξ_j)(1+ξ_j+n_j), divided by (1+F) when the
/// tower is cut by a hypersurface of class F.
TruncatedPolynomial tangent_total_chern(const SpaceTower& space);

/// c_k(E) = e_k(line classes): elementary symmetric polynomials of the
/// split bundle's line roots. Returns c_0..c_r.
std::vector<TruncatedPolynomial> split_chern_classes(const RingPtr& ring,
                                                     const std::vector<LinearForm>& lines);

/// ρ([Y,E], Θ) = ∫_Y Θ(c(T_Y), c(E)) for Θ the monomial of the index;
/// requires deg Θ == dim Y.
Rational chern_invariant(const GeneratorSpec& g, const MonomialIndex& theta);

/// Per-tower evaluation state: tangent Chern classes and memoized
/// tangent-monomial products, shared across bundle choices on the tower.
class ChernEngine {
public:
    explicit ChernEngine(SpaceTower tower);

    const SpaceTower& tower() const { return tower_; }
    /// F · ∏_{i ∈ ν} c_i(T), memoized per ν.
    const TruncatedPolynomial& weighted_tangent_monomial(const Partition& nu);
    /// ∫ F · Θ(c(T), c(E)) with bundle_chern = c_0..c_r of E.
    Rational invariant(const std::vector<TruncatedPolynomial>& bundle_chern,
                       const MonomialIndex& theta);

private:
    SpaceTower tower_;
    std::vector<TruncatedPolynomial> tangent_pieces_;  // graded pieces of c(T)
    std::map<std::vector<int>, TruncatedPolynomial> memo_;
};

/// Engines keyed by ring identity and multiplier, so class specifications
/// whose terms share a tower evaluate the tangent data once.
class EngineCache {
public:
    ChernEngine& engine_for(const SpaceTower& tower);

private:
    std::map<std::pair<const GradedRing*, std::optional<LinearForm>>,
             std::unique_ptr<ChernEngine>>
        engines_;
};

/// All Chern invariants of a class, in canonical monomial order.
ChernVector chern_vector(const ClassSpec& c, EngineCache* cache = nullptr);

/// φ(λ,μ) = [P^λ, O^{r−ℓ(μ)} ⊕ ⊕_{m∈μ} L_m]; trivial factors first,
/// repeated parts of μ consume distinct matching λ-factors left to right.
GeneratorSpec phi(const PartitionPair& pair, int r);

/// φ(λ,(m_1,...,m_r)) = [P^λ, (L_{m_1},...,L_{m_r})]; slot i carries the
/// hyperplane class of the factor matched to m_i, or 0 when m_i = 0.
GeneratorSpec phi_list(const PartitionList& list);

/// "[P2xP1, O(1,0)+O(0,1)]"; collapses an all-trivial bundle to "O^r".
std::string class_name(const GeneratorSpec& g);
/// Ordered-list form "[P3, (O,O(1))]".
std::string list_name(const GeneratorSpec& g);

}  // namespace cobord
