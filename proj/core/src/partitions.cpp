#include "cobord/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cobord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts().begin(), a.parts().end(),
                                                  b.parts().begin(), b.parts().end());
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    for (int row = 1; row <= p.largest_part(); ++row) {
        int count = 0;
        for (int part : p.parts())
            if (part >= row) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

bool is_sub_partition(const Partition& mu, const Partition& lambda) {
    for (int part : mu.parts())
        if (mu.multiplicity(part) > lambda.multiplicity(part)) return false;
    return true;
}

Partition multiset_difference(const Partition& lambda, const Partition& mu) {
    if (!is_sub_partition(mu, lambda))
        throw std::invalid_argument("multiset_difference: " + mu.str() + " is not a sub-partition of " +
                                    lambda.str());
    std::vector<int> rest;
    std::map<int, int> take;
    for (int part : mu.parts()) ++take[part];
    for (int part : lambda.parts()) {
        auto it = take.find(part);
        if (it != take.end() && it->second > 0)
            --it->second;
        else
            rest.push_back(part);
    }
    return Partition(std::move(rest));
}

int partition_count(int n) {
    if (n < 0) return 0;
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int w = part; w <= n; ++w) p[w] += p[w - part];
    return p[n];
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    if (out.empty()) out.emplace_back();  // n = 0
    return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda, int r) {
    // Distinct parts with multiplicities; choose a count per distinct part.
    std::vector<std::pair<int, int>> distinct;
    for (int part : lambda.parts()) {
        if (!distinct.empty() && distinct.back().first == part)
            ++distinct.back().second;
        else
            distinct.emplace_back(part, 1);
    }
    std::vector<Partition> out;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == distinct.size()) {
            out.push_back(Partition(chosen));
            return;
        }
        auto [part, mult] = distinct[i];
        for (int c = 0; c <= std::min(mult, r - used); ++c) {
            for (int k = 0; k < c; ++k) chosen.push_back(part);
            rec(i + 1, used + c);
            for (int k = 0; k < c; ++k) chosen.pop_back();
        }
    };
    if (r < 0) return out;
    rec(0, 0);
    return out;
}

std::string PartitionPair::str() const { return "(" + lambda.str() + "," + mu.str() + ")"; }

bool is_valid_pair(const PartitionPair& pair, int n, int r) {
    return pair.lambda.weight() == n && pair.mu.length() <= r && is_sub_partition(pair.mu, pair.lambda);
}

std::string PartitionList::str() const {
    std::string s = "(" + lambda.str() + ",(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(m[i]);
    }
    return s + "))";
}

bool is_valid_list(const PartitionList& list, int n, int r) {
    if (list.lambda.weight() != n || static_cast<int>(list.m.size()) != r) return false;
    std::vector<int> nonzero;
    for (int v : list.m) {
        if (v < 0) return false;
        if (v > 0) nonzero.push_back(v);
    }
    return is_sub_partition(Partition::from_unsorted(std::move(nonzero)), list.lambda);
}

std::vector<int> MonomialIndex::v_degree(int r) const {
    if (mu_.largest_part() > r)
        throw std::invalid_argument("MonomialIndex: largest part of mu exceeds r");
    std::vector<int> m(static_cast<std::size_t>(r), 0);
    for (int part : mu_.parts()) ++m[static_cast<std::size_t>(part) - 1];
    return m;
}

std::string MonomialIndex::str() const {
    std::string s;
    auto append = [&s](char var, const Partition& p) {
        int i = 0;
        const auto& parts = p.parts();
        while (i < static_cast<int>(parts.size())) {
            int j = i;
            while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
            if (!s.empty()) s += '*';
            s += var;
            s += std::to_string(parts[i]);
            if (j - i > 1) s += '^' + std::to_string(j - i);
            i = j;
        }
    };
    append('u', nu_);
    append('v', mu_);
    return s.empty() ? "1" : s;
}

bool is_valid_monomial(const MonomialIndex& q, int n, int r) {
    return q.mu().largest_part() <= r && q.mu().weight() <= n &&
           q.nu().weight() == n - q.mu().weight();
}

std::strong_ordering canonical_order(const MonomialIndex& a, const MonomialIndex& b) {
    // v-degree read right-to-left: the highest index where the multiplicity
    // differs decides; smaller multiplicity there comes first.
    int top = std::max(a.mu().largest_part(), b.mu().largest_part());
    for (int j = top; j >= 1; --j) {
        int ma = a.mu().multiplicity(j);
        int mb = b.mu().multiplicity(j);
        if (ma != mb) return ma < mb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Same μ: descending lexicographic on ν (larger ν first).
    auto c = lex_compare(a.nu(), b.nu());
    if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    if (c == std::strong_ordering::less) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<MonomialIndex> enumerate_monomials(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("enumerate_monomials: n, r must be non-negative");
    std::vector<MonomialIndex> out;
    for (int w = 0; w <= n; ++w) {
        for (const Partition& mu : enumerate_partitions(w)) {
            if (mu.largest_part() > r) continue;
            for (const Partition& nu : enumerate_partitions(n - w)) out.emplace_back(nu, mu);
        }
    }
    std::sort(out.begin(), out.end(), [](const MonomialIndex& a, const MonomialIndex& b) {
        return canonical_order(a, b) == std::strong_ordering::less;
    });
    return out;
}

std::vector<PartitionPair> enumerate_pairs(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("enumerate_pairs: n, r must be non-negative");
    std::vector<PartitionPair> out;
    for (const Partition& lambda : enumerate_partitions(n))
        for (Partition& mu : sub_partitions(lambda, r)) out.push_back({lambda, std::move(mu)});
    std::sort(out.begin(), out.end(), [](const PartitionPair& a, const PartitionPair& b) {
        return canonical_order(epsilon_inverse(a), epsilon_inverse(b)) == std::strong_ordering::less;
    });
    return out;
}

std::vector<PartitionList> enumerate_lists(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("enumerate_lists: n, r must be non-negative");
    std::vector<PartitionList> out;
    for (const Partition& lambda : enumerate_partitions(n)) {
        // Remaining multiplicity per distinct part while filling the r slots.
        std::vector<std::pair<int, int>> avail;
        for (int part : lambda.parts()) {
            if (!avail.empty() && avail.back().first == part)
                ++avail.back().second;
            else
                avail.emplace_back(part, 1);
        }
        std::vector<int> m(static_cast<std::size_t>(r), 0);
        std::function<void(int)> rec = [&](int slot) {
            if (slot == r) {
                out.push_back({lambda, m});
                return;
            }
            m[static_cast<std::size_t>(slot)] = 0;
            rec(slot + 1);
            for (auto& [part, left] : avail) {
                if (left == 0) continue;
                --left;
                m[static_cast<std::size_t>(slot)] = part;
                rec(slot + 1);
                m[static_cast<std::size_t>(slot)] = 0;
                ++left;
            }
        };
        rec(0);
    }
    return out;
}

PartitionPair epsilon(const MonomialIndex& q) {
    Partition mut = transpose(q.mu());
    return {multiset_union(q.nu(), mut), std::move(mut)};
}

MonomialIndex epsilon_inverse(const PartitionPair& pair) {
    return {multiset_difference(pair.lambda, pair.mu), transpose(pair.mu)};
}

}  // namespace cobord
