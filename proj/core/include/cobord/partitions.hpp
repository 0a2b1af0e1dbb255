#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cobord {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;  // |λ|
    int length() const { return static_cast<int>(parts_.size()); }  // ℓ(λ)
    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    int multiplicity(int part) const;

    bool operator==(const Partition&) const = default;

    std::string str() const;  // "(2,1)", "()" for the empty partition

private:
    std::vector<int> parts_;
};

/// Lexicographic comparison of the parts sequences (used descending: larger first).
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// Conjugate partition (transposed Young diagram).
Partition transpose(const Partition& p);

Partition multiset_union(const Partition& a, const Partition& b);
bool is_sub_partition(const Partition& mu, const Partition& lambda);
/// Multiset difference lambda \ mu; requires mu ⊂ lambda.
Partition multiset_difference(const Partition& lambda, const Partition& mu);

/// Number of partitions p(n); p(0) = 1.
int partition_count(int n);

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All inequivalent sub-partitions of lambda of length ≤ r, as multiset
/// selections (permuting equal parts gives the same selection).
std::vector<Partition> sub_partitions(const Partition& lambda, int r);

/// (λ, μ) with λ ⊢ n and μ ⊂ λ of length ≤ r; indexes the basis φ(λ,μ).
struct PartitionPair {
    Partition lambda;
    Partition mu;
    bool operator==(const PartitionPair&) const = default;
    std::string str() const;
};
bool is_valid_pair(const PartitionPair& pair, int n, int r);

/// (λ, (m_1,...,m_r)) with m_i ≥ 0 whose non-zero entries form a
/// sub-partition of λ; indexes the line-bundle-list basis.
struct PartitionList {
    Partition lambda;
    std::vector<int> m;
    bool operator==(const PartitionList&) const = default;
    std::string str() const;
};
bool is_valid_list(const PartitionList& list, int n, int r);

/// Index (ν,μ) of the graded degree-n monomial ∏ u_i^{l_i} ∏ v_j^{m_j}:
/// ν = 1^{l_1}···n^{l_n} collects the tangent-class exponents and
/// μ = 1^{m_1}···r^{m_r} the bundle-class exponents, so |ν| + |μ| = n.
class MonomialIndex {
public:
    MonomialIndex(Partition nu, Partition mu) : nu_(std::move(nu)), mu_(std::move(mu)) {}

    const Partition& nu() const { return nu_; }
    const Partition& mu() const { return mu_; }
    int degree() const { return nu_.weight() + mu_.weight(); }

    /// v-degree vector (m_1,...,m_r); requires largest part of μ ≤ r.
    std::vector<int> v_degree(int r) const;

    bool operator==(const MonomialIndex&) const = default;
    std::string str() const;  // e.g. "u2*u1*v1^2", "1" for (∅,∅)

private:
    Partition nu_;
    Partition mu_;
};
bool is_valid_monomial(const MonomialIndex& q, int n, int r);

/// Total order on monomial indices: primary key is the v-degree vector
/// compared from the rightmost entry leftward (smaller first); identical
/// μ is broken by descending lexicographic order on ν.
std::strong_ordering canonical_order(const MonomialIndex& a, const MonomialIndex& b);

/// All pairs of size n and type r, ordered by canonical_order through ε.
std::vector<PartitionPair> enumerate_pairs(int n, int r);

/// All partition lists of size n and type r, grouped by λ.
std::vector<PartitionList> enumerate_lists(int n, int r);

/// All monomial indices of degree n with v-parts ≤ r, in canonical order.
std::vector<MonomialIndex> enumerate_monomials(int n, int r);

/// ε(ν,μ) = (ν ∪ μ^t, μ^t): bijection from monomial indices to pairs.
PartitionPair epsilon(const MonomialIndex& q);
MonomialIndex epsilon_inverse(const PartitionPair& pair);

}  // namespace cobord
