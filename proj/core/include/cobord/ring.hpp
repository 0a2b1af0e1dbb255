#pragma once

#include "cobord/rational.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cobord {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Homogeneous degree-1 class as dense coefficients over the first k
/// generators of a ring (shorter vectors are zero-padded on the right).
using LinearForm = std::vector<Rational>;

/// Graded quotient ring
///   Q[h_1..h_ℓ, ξ_1..ξ_L] / (h_i^{λ_i+1},  ξ_j² + n_j·ξ_j)
/// with every generator of degree 1. The base generators h_i are the
/// hyperplane classes of a product P^{λ_1}×···×P^{λ_ℓ}; each level
/// generator ξ_j carries the rank-2 projective-bundle relation for
/// P(O⊕N_j), where n_j = c_1(N_j) is a linear form in the generators
/// introduced before level j.
class GradedRing {
public:
    static RingPtr make(std::vector<int> base_dims, std::vector<LinearForm> levels = {});

    int base_count() const { return static_cast<int>(base_dims_.size()); }
    int level_count() const { return static_cast<int>(levels_.size()); }
    int generator_count() const { return base_count() + level_count(); }
    bool is_level(int g) const { return g >= base_count(); }
    /// Maximal stored exponent: λ_i for base generators, 1 for levels.
    int cap(int g) const { return caps_[static_cast<std::size_t>(g)]; }
    const std::vector<int>& base_dims() const { return base_dims_; }
    const std::vector<LinearForm>& levels() const { return levels_; }

    int top_degree() const { return top_degree_; }
    std::uint64_t monomial_count() const { return count_; }
    /// Ring with the top level removed; null when there is no level.
    const RingPtr& parent() const { return parent_; }

    std::uint64_t stride(int g) const { return strides_[static_cast<std::size_t>(g)]; }
    std::uint64_t pack(std::span<const int> exps) const;
    void unpack(std::uint64_t key, std::span<int> exps) const;
    int degree_of_key(std::uint64_t key) const;
    /// Key of the point class ∏ h_i^{λ_i} (levels at exponent 0).
    std::uint64_t base_top_key() const { return base_top_key_; }

    std::string generator_name(int g) const;

    bool operator==(const GradedRing& o) const {
        return base_dims_ == o.base_dims_ && levels_ == o.levels_;
    }

private:
    GradedRing() = default;

    std::vector<int> base_dims_;
    std::vector<LinearForm> levels_;
    std::vector<int> caps_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t count_ = 1;
    std::uint64_t base_top_key_ = 0;
    int top_degree_ = 0;
    RingPtr parent_;
};

/// Checks pointer identity first, structural equality second.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Element of a GradedRing: sparse association from exponent tuples
/// (packed into mixed-radix keys, kept sorted) to non-zero coefficients.
/// All reductions are applied eagerly, so stored exponents never violate
/// the ring relations. Values are immutable; operations return new values.
class TruncatedPolynomial {
public:
    explicit TruncatedPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static TruncatedPolynomial zero(RingPtr ring) { return TruncatedPolynomial(std::move(ring)); }
    static TruncatedPolynomial constant(RingPtr ring, Rational value);
    static TruncatedPolynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
    static TruncatedPolynomial generator(RingPtr ring, int g);
    static TruncatedPolynomial linear(RingPtr ring, const LinearForm& form);
    /// Raw terms; keys must be valid for the ring (no reduction is applied).
    static TruncatedPolynomial from_terms(RingPtr ring,
                                          std::vector<std::pair<std::uint64_t, Rational>> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<std::uint64_t, Rational>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Maximal term degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    Rational coefficient(std::span<const int> exps) const;
    Rational coefficient_of_key(std::uint64_t key) const;
    TruncatedPolynomial graded_piece(int d) const;

    bool operator==(const TruncatedPolynomial& o) const;

    TruncatedPolynomial operator-() const;
    friend TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    friend TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    friend TruncatedPolynomial operator*(const Rational& c, const TruncatedPolynomial& a);
    friend TruncatedPolynomial operator+(const TruncatedPolynomial& a, const Rational& c);
    friend TruncatedPolynomial operator-(const TruncatedPolynomial& a, const Rational& c);

    std::string str() const;  // human-readable, deterministic term order

private:
    RingPtr ring_;
    std::vector<std::pair<std::uint64_t, Rational>> terms_;  // sorted by key
};

TruncatedPolynomial power(const TruncatedPolynomial& a, int k);

/// Fiber integration of the top P¹-bundle level: π_*(x + y·ξ_top) = y.
/// The result lives in the ring with the top level removed.
TruncatedPolynomial pushdown(const TruncatedPolynomial& a);

/// Integration over the whole tower: pushdown once per level (top first),
/// then the coefficient of the point class ∏ h_i^{λ_i} of the base.
Rational integrate(const TruncatedPolynomial& a);

/// Reinterprets an element of ring->parent() (or a deeper ancestor) in
/// the given tower ring; valid because ancestor strides are shared.
TruncatedPolynomial pullback(const TruncatedPolynomial& a, const RingPtr& tower);

/// Multiplication by the inverse of (1 + f) for homogeneous f of degree
/// ≥ 1; exact in the truncated ring via the finite geometric series.
TruncatedPolynomial divide_by_one_plus(const TruncatedPolynomial& a, const TruncatedPolynomial& f);

}  // namespace cobord
