#pragma once

#include "cobord/partitions.hpp"
#include "cobord/rational.hpp"
#include "cobord/ring.hpp"

#include <random>
#include <vector>

namespace testutil {

using cobord::Partition;
using cobord::Rational;
using cobord::RingPtr;
using cobord::TruncatedPolynomial;

inline Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

inline Rational random_rational(std::mt19937& rng, int max_abs_num = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Sparse random element: up to `terms` random monomials of the ring with
/// small rational coefficients. Every key below monomial_count() is a
/// valid reduced monomial, so sampling keys uniformly is exact.
inline TruncatedPolynomial random_element(const RingPtr& ring, std::mt19937& rng, int terms = 5) {
    std::uniform_int_distribution<std::uint64_t> key(0, ring->monomial_count() - 1);
    std::vector<std::pair<std::uint64_t, Rational>> out;
    for (int t = 0; t < terms; ++t) out.emplace_back(key(rng), random_rational(rng));
    TruncatedPolynomial p = TruncatedPolynomial::zero(ring);
    for (const auto& [k, c] : out) {
        std::vector<int> exps(static_cast<std::size_t>(ring->generator_count()));
        ring->unpack(k, exps);
        TruncatedPolynomial mono = TruncatedPolynomial::constant(ring, c);
        for (int g = 0; g < ring->generator_count(); ++g)
            for (int e = 0; e < exps[static_cast<std::size_t>(g)]; ++e)
                mono = mono * TruncatedPolynomial::generator(ring, g);
        p = p + mono;
    }
    return p;
}

/// Random homogeneous element of the given degree (rejection sampling).
inline TruncatedPolynomial random_homogeneous(const RingPtr& ring, std::mt19937& rng, int degree,
                                              int terms = 4) {
    std::uniform_int_distribution<std::uint64_t> key(0, ring->monomial_count() - 1);
    std::vector<std::pair<std::uint64_t, Rational>> picked;
    int guard = 0;
    while (static_cast<int>(picked.size()) < terms && guard < 20000) {
        std::uint64_t k = key(rng);
        ++guard;
        if (ring->degree_of_key(k) == degree) picked.emplace_back(k, random_rational(rng));
    }
    std::sort(picked.begin(), picked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint64_t, Rational>> merged;
    for (auto& [k, c] : picked) {
        if (!merged.empty() && merged.back().first == k)
            merged.back().second += c;
        else
            merged.emplace_back(k, c);
    }
    std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
    return TruncatedPolynomial::from_terms(ring, std::move(merged));
}

}  // namespace testutil
