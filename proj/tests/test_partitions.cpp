#include "cobord/partitions.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace cobord;
using testutil::P;

namespace {

// Independent oracle: count weakly decreasing positive sequences summing
// to n by direct recursion, never touching enumerate_partitions.
int count_partitions_brute(int n, int max_part) {
    if (n == 0) return 1;
    int total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions_brute(n - k, k);
    return total;
}

std::vector<std::vector<int>> raw(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST_CASE("enumerate_partitions: base cases and fixed order") {
    CHECK(raw(enumerate_partitions(0)) == std::vector<std::vector<int>>{{}});
    CHECK(raw(enumerate_partitions(3)) ==
          std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(enumerate_partitions(5).size() == 7);
}

TEST_CASE("enumerate_partitions: counts match the brute-force oracle up to 12") {
    for (int n = 0; n <= 12; ++n) {
        int expected = count_partitions_brute(n, n == 0 ? 1 : n);
        CHECK(static_cast<int>(enumerate_partitions(n).size()) == expected);
        CHECK(partition_count(n) == expected);
    }
}

TEST_CASE("enumerate_partitions: descending lexicographic, no duplicates") {
    for (int n = 0; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(lex_compare(ps[i], ps[i + 1]) == std::strong_ordering::greater);
        for (const auto& p : ps) CHECK(p.weight() == n);
    }
}

TEST_CASE("Partition validates its invariants") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.weight() == 0);
}

TEST_CASE("transpose: examples and involution") {
    CHECK(transpose(P({3})) == P({1, 1, 1}));
    CHECK(transpose(P({2, 1})) == P({2, 1}));
    CHECK(transpose(Partition{}) == Partition{});
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p).weight() == p.weight());
            CHECK(transpose(p).length() == p.largest_part());
        }
    }
}

TEST_CASE("sub_partitions: multiset selections of bounded length") {
    auto as_set = [](const std::vector<Partition>& v) {
        std::set<std::vector<int>> s;
        for (const auto& p : v) s.insert(p.parts());
        return s;
    };
    CHECK(as_set(sub_partitions(P({2, 1}), 2)) ==
          std::set<std::vector<int>>{{}, {2}, {1}, {2, 1}});
    CHECK(as_set(sub_partitions(P({1, 1, 1}), 2)) ==
          std::set<std::vector<int>>{{}, {1}, {1, 1}});
    CHECK(as_set(sub_partitions(P({1, 1}), 0)) == std::set<std::vector<int>>{{}});
    // λ itself appears iff its length fits.
    CHECK(as_set(sub_partitions(P({2, 1, 1}), 3)).count({2, 1, 1}) == 1);
    CHECK(as_set(sub_partitions(P({2, 1, 1}), 2)).count({2, 1, 1}) == 0);
}

TEST_CASE("enumerate_pairs: displayed set for (3,2)") {
    auto pairs = enumerate_pairs(3, 2);
    std::set<std::pair<std::vector<int>, std::vector<int>>> got;
    for (const auto& p : pairs) got.insert({p.lambda.parts(), p.mu.parts()});
    std::set<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{3}, {}},      {{3}, {3}},        {{2, 1}, {}},      {{2, 1}, {2}},       {{2, 1}, {1}},
        {{2, 1}, {2, 1}}, {{1, 1, 1}, {}}, {{1, 1, 1}, {1}},  {{1, 1, 1}, {1, 1}},
    };
    CHECK(got == expected);
    CHECK(pairs.size() == 9);
}

TEST_CASE("enumerate_pairs: degenerate types") {
    for (int n = 0; n <= 6; ++n) {
        auto pairs = enumerate_pairs(n, 0);
        CHECK(pairs.size() == enumerate_partitions(n).size());
        for (const auto& p : pairs) CHECK(p.mu.empty());
    }
    for (int r = 0; r <= 4; ++r) {
        auto pairs = enumerate_pairs(0, r);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == PartitionPair{});
    }
}

TEST_CASE("enumerate_lists: displayed set for (3,2)") {
    auto lists = enumerate_lists(3, 2);
    std::set<std::pair<std::vector<int>, std::vector<int>>> got;
    for (const auto& l : lists) got.insert({l.lambda.parts(), l.m});
    std::set<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{3}, {0, 0}},      {{3}, {3, 0}},      {{3}, {0, 3}},      {{2, 1}, {0, 0}},
        {{2, 1}, {2, 0}},   {{2, 1}, {1, 0}},   {{2, 1}, {0, 1}},   {{2, 1}, {0, 2}},
        {{2, 1}, {2, 1}},   {{2, 1}, {1, 2}},   {{1, 1, 1}, {0, 0}}, {{1, 1, 1}, {1, 0}},
        {{1, 1, 1}, {0, 1}}, {{1, 1, 1}, {1, 1}},
    };
    CHECK(got == expected);
    CHECK(lists.size() == 14);
}

TEST_CASE("enumerate_lists: small cases and validity") {
    auto lists = enumerate_lists(1, 2);
    std::set<std::pair<std::vector<int>, std::vector<int>>> got;
    for (const auto& l : lists) got.insert({l.lambda.parts(), l.m});
    CHECK(got == std::set<std::pair<std::vector<int>, std::vector<int>>>{
                     {{1}, {0, 0}}, {{1}, {1, 0}}, {{1}, {0, 1}}});
    for (int n = 0; n <= 5; ++n) {
        auto plain = enumerate_lists(n, 0);
        CHECK(plain.size() == enumerate_partitions(n).size());
    }
    for (const auto& l : enumerate_lists(4, 3)) CHECK(is_valid_list(l, 4, 3));
}

TEST_CASE("enumerate_lists: count equals degree-n monomials in u_i and r line variables") {
    // Independent count: Σ_k C(k+r-1, r-1) · p(n-k).
    auto binom = [](long n, long k) {
        long b = 1;
        for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    for (int n = 0; n <= 6; ++n) {
        for (int r = 0; r <= 3; ++r) {
            long expected = 0;
            for (int k = 0; k <= n; ++k)
                expected += (r == 0 ? (k == 0 ? 1 : 0) : binom(k + r - 1, r - 1)) *
                            partition_count(n - k);
            CHECK(static_cast<long>(enumerate_lists(n, r).size()) == expected);
        }
    }
}

TEST_CASE("enumerate_monomials: the 9 basic invariants of C_{3,2}") {
    auto q = enumerate_monomials(3, 2);
    REQUIRE(q.size() == 9);
    std::set<std::string> names;
    for (const auto& m : q) names.insert(m.str());
    CHECK(names == std::set<std::string>{"u3", "u2*u1", "u1^3", "u2*v1", "u1^2*v1", "u1*v1^2",
                                         "u1*v2", "v1*v2", "v1^3"});
    for (const auto& m : q) CHECK(is_valid_monomial(m, 3, 2));
}

TEST_CASE("enumerate_monomials: degenerate cases") {
    auto q11 = enumerate_monomials(1, 1);
    REQUIRE(q11.size() == 2);
    CHECK(q11[0].str() == "u1");
    CHECK(q11[1].str() == "v1");
    for (int n = 0; n <= 7; ++n) {
        auto q = enumerate_monomials(n, 0);
        CHECK(q.size() == enumerate_partitions(n).size());
        for (const auto& m : q) CHECK(m.mu().empty());
    }
}

TEST_CASE("canonical_order: the declared rules") {
    // v-degree (0,1) dominates (2,0): compare m_2 first.
    MonomialIndex u1v2(P({1}), P({2}));
    MonomialIndex u1v1sq(P({1}), P({1, 1}));
    CHECK(canonical_order(u1v1sq, u1v2) == std::strong_ordering::less);
    // equal μ: ν = (2) precedes (1,1).
    MonomialIndex a(P({2}), P({1}));
    MonomialIndex b(P({1, 1}), P({1}));
    CHECK(canonical_order(a, b) == std::strong_ordering::less);
    CHECK(canonical_order(a, a) == std::strong_ordering::equal);
}

TEST_CASE("canonical_order: strict total order on Q_{4,2}") {
    auto q = enumerate_monomials(4, 2);
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            auto ij = canonical_order(q[i], q[j]);
            auto ji = canonical_order(q[j], q[i]);
            if (i == j) {
                CHECK(ij == std::strong_ordering::equal);
            } else {
                CHECK(ij != std::strong_ordering::equal);  // trichotomy on distinct elements
                CHECK(((ij == std::strong_ordering::less) !=
                       (ji == std::strong_ordering::less)));  // antisymmetry
            }
        }
    }
    // transitivity over the sorted enumeration
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        CHECK(canonical_order(q[i], q[i + 1]) == std::strong_ordering::less);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            CHECK(canonical_order(q[i], q[j]) == std::strong_ordering::less);
}

TEST_CASE("epsilon: examples") {
    CHECK(epsilon({P({3}), {}}) == PartitionPair{P({3}), {}});
    CHECK(epsilon({P({1}), P({1, 1})}) == PartitionPair{P({2, 1}), P({2})});
    CHECK(epsilon({{}, P({2, 1})}) == PartitionPair{P({2, 1}), P({2, 1})});
}

TEST_CASE("epsilon: bijection Q_{n,r} -> P_{n,r} for n <= 8, r <= 4") {
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; r <= 4; ++r) {
            auto monomials = enumerate_monomials(n, r);
            auto pairs = enumerate_pairs(n, r);
            REQUIRE(monomials.size() == pairs.size());
            std::set<std::pair<std::vector<int>, std::vector<int>>> images;
            for (const auto& q : monomials) {
                PartitionPair p = epsilon(q);
                CHECK(is_valid_pair(p, n, r));
                images.insert({p.lambda.parts(), p.mu.parts()});
                CHECK(epsilon_inverse(p) == q);
            }
            CHECK(images.size() == monomials.size());  // injective
            // enumerate_pairs is ordered by ε of the canonical order
            for (std::size_t i = 0; i < monomials.size(); ++i)
                CHECK(pairs[i] == epsilon(monomials[i]));
        }
    }
}

TEST_CASE("rank identity: |P_{n,r}| = sum of p(n-|κ|) over κ of length <= r") {
    for (int n = 0; n <= 10; ++n) {
        for (int r = 0; r <= 5; ++r) {
            long expected = 0;
            for (int w = 0; w <= n; ++w)
                for (const auto& kappa : enumerate_partitions(w))
                    if (kappa.length() <= r) expected += partition_count(n - w);
            CHECK(static_cast<long>(enumerate_pairs(n, r).size()) == expected);
        }
    }
}
