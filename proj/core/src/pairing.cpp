#include "cobord/pairing.hpp"

#include "cobord/parallel.hpp"
#include "cobord/serialize.hpp"
#include "linalg.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace cobord {

namespace {

// Strict comparison of v-degrees, rightmost multiplicity first.
bool v_degree_less(const Partition& mu_a, const Partition& mu_b) {
    int top = std::max(mu_a.largest_part(), mu_b.largest_part());
    for (int j = top; j >= 1; --j) {
        int a = mu_a.multiplicity(j);
        int b = mu_b.multiplicity(j);
        if (a != b) return a < b;
    }
    return false;
}

}  // namespace

PairingMatrix build_matrix(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("build_matrix: n, r must be non-negative");
    PairingMatrix m;
    m.n = n;
    m.r = r;
    m.index = enumerate_monomials(n, r);
    m.rows.resize(m.index.size());
    parallel_for_chunks(m.index.size(), [&](std::size_t begin, std::size_t end, unsigned) {
        EngineCache engines;  // rows with the same λ share tangent data
        for (std::size_t i = begin; i < end; ++i) {
            ClassSpec row_class{n, r, {}};
            row_class.add(1, phi(epsilon(m.index[i]), r));
            m.rows[i] = chern_vector(row_class, &engines).values;
        }
    });
    return m;
}

TriangularReport verify_block_triangular(const PairingMatrix& m) {
    TriangularReport report;
    for (std::size_t i = 0; i < m.index.size(); ++i) {
        for (std::size_t j = 0; j < m.index.size(); ++j) {
            if (!v_degree_less(m.index[i].mu(), m.index[j].mu())) continue;
            if (!m.rows[i][j].is_zero()) {
                report.passed = false;
                report.violations.push_back({i, j, m.rows[i][j]});
            }
        }
    }
    return report;
}

BlockReport verify_diagonal_blocks(const PairingMatrix& m) {
    BlockReport report;
    std::map<int, PairingMatrix> zero_rank_cache;
    std::size_t i = 0;
    while (i < m.index.size()) {
        const Partition& mu = m.index[i].mu();
        std::size_t end = i;
        while (end < m.index.size() && m.index[end].mu() == mu) ++end;
        int rest = m.n - mu.weight();
        auto it = zero_rank_cache.find(rest);
        if (it == zero_rank_cache.end())
            it = zero_rank_cache.emplace(rest, build_matrix(rest, 0)).first;
        const PairingMatrix& expected = it->second;
        for (std::size_t a = i; a < end; ++a) {
            for (std::size_t b = i; b < end; ++b) {
                const Rational& got = m.rows[a][b];
                const Rational& want = expected.rows[a - i][b - i];
                if (got != want) {
                    report.passed = false;
                    report.mismatches.push_back({mu, a - i, b - i, got, want});
                }
            }
        }
        i = end;
    }
    return report;
}

Rational determinant(const PairingMatrix& m) { return detail::determinant_exact(m.rows); }

bool dimension_identity(int n, int r) {
    std::size_t pairs = enumerate_pairs(n, r).size();
    std::size_t monomials = enumerate_monomials(n, r).size();
    long expected = 0;
    for (int w = 0; w <= n; ++w)
        for (const Partition& kappa : enumerate_partitions(w))
            if (kappa.length() <= r) expected += partition_count(n - w);
    return pairs == monomials && static_cast<long>(pairs) == expected;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("COBORD_CACHE_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::filesystem::path("cobord-cache");
}

PairingMatrix build_matrix_cached(int n, int r, const std::optional<std::filesystem::path>& dir) {
    const std::filesystem::path cache_dir = dir.value_or(default_cache_dir());
    const std::filesystem::path file =
        cache_dir / ("matrix_" + std::to_string(n) + "_" + std::to_string(r) + ".json");
    if (std::filesystem::exists(file)) {
        try {
            PairingMatrix m = matrix_from_json(parse_json_file(file), file.string());
            if (m.n == n && m.r == r && m.index == enumerate_monomials(n, r)) return m;
        } catch (const std::exception&) {
            // unreadable cache entry: fall through and rebuild
        }
    }
    PairingMatrix m = build_matrix(n, r);
    write_file_atomic(file, dump_canonical(to_json(m)));
    return m;
}

}  // namespace cobord
