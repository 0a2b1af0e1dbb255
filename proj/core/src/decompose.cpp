#include "cobord/decompose.hpp"

#include "linalg.hpp"

#include <stdexcept>

namespace cobord {

Decomposition decompose(const ChernVector& target,
                        const std::optional<std::filesystem::path>& cache_dir) {
    const PairingMatrix m = build_matrix_cached(target.n, target.r, cache_dir);
    if (target.values.size() != m.index.size())
        throw std::invalid_argument("decompose: Chern vector has length " +
                                    std::to_string(target.values.size()) + ", expected " +
                                    std::to_string(m.index.size()));
    // Rows of M are the Chern vectors of the φ(ε(q)); solve Mᵀ·x = target.
    detail::RationalMatrix a(m.index.size(), std::vector<Rational>(m.index.size(), Rational(0)));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.rows[i].size(); ++j) a[j][i] = m.rows[i][j];
    auto x = detail::solve_exact(std::move(a), target.values);
    if (!x)
        throw std::logic_error("decompose: pairing matrix M_{" + std::to_string(target.n) + "," +
                               std::to_string(target.r) +
                               "} is singular; this contradicts its nonsingularity and "
                               "indicates an implementation bug");
    Decomposition out;
    for (std::size_t i = 0; i < x->size(); ++i)
        if (!(*x)[i].is_zero()) out.emplace_back(epsilon(m.index[i]), std::move((*x)[i]));
    return out;
}

Decomposition decompose(const ClassSpec& c, const std::optional<std::filesystem::path>& cache_dir) {
    return decompose(chern_vector(c), cache_dir);
}

ChernVector reconstruct(const Decomposition& d, int n, int r) {
    ClassSpec sum{n, r, {}};
    for (const auto& [pair, coeff] : d) sum.add(coeff, phi(pair, r));
    return chern_vector(sum);
}

namespace {

// Re-indexes a linear form of one factor into the concatenated ring.
LinearForm remap_form(const LinearForm& form, int old_base, int new_base_offset, int total_base,
                      int new_level_offset, int total_generators) {
    LinearForm out(static_cast<std::size_t>(total_generators), Rational(0));
    for (std::size_t g = 0; g < form.size(); ++g) {
        if (form[g].is_zero()) continue;
        int target = static_cast<int>(g) < old_base
                         ? new_base_offset + static_cast<int>(g)
                         : total_base + new_level_offset + (static_cast<int>(g) - old_base);
        out[static_cast<std::size_t>(target)] = form[g];
    }
    return out;
}

}  // namespace

GeneratorSpec external_product(const GeneratorSpec& g1, const GeneratorSpec& g2) {
    if (g1.space.multiplier || g2.space.multiplier)
        throw std::invalid_argument(
            "external_product: factors must be pure towers (no fundamental multiplier)");
    const int base1 = static_cast<int>(g1.space.base.size());
    const int base2 = static_cast<int>(g2.space.base.size());
    const int levels1 = static_cast<int>(g1.space.levels.size());
    const int levels2 = static_cast<int>(g2.space.levels.size());
    const int total_base = base1 + base2;
    const int total = total_base + levels1 + levels2;

    std::vector<int> base = g1.space.base;
    base.insert(base.end(), g2.space.base.begin(), g2.space.base.end());

    std::vector<LinearForm> levels;
    for (int j = 0; j < levels1; ++j) {
        LinearForm f = remap_form(g1.space.levels[static_cast<std::size_t>(j)], base1, 0, total_base, 0, total);
        f.resize(static_cast<std::size_t>(total_base + j), Rational(0));
        levels.push_back(std::move(f));
    }
    for (int j = 0; j < levels2; ++j) {
        LinearForm f = remap_form(g2.space.levels[static_cast<std::size_t>(j)], base2, base1, total_base,
                                  levels1, total);
        f.resize(static_cast<std::size_t>(total_base + levels1 + j), Rational(0));
        levels.push_back(std::move(f));
    }
    SpaceTower space = SpaceTower::make(std::move(base), std::move(levels));

    std::vector<LinearForm> lines;
    lines.reserve(static_cast<std::size_t>(g1.rank()) * static_cast<std::size_t>(g2.rank()));
    for (const LinearForm& l1 : g1.lines) {
        LinearForm a = remap_form(l1, base1, 0, total_base, 0, total);
        for (const LinearForm& l2 : g2.lines) {
            LinearForm b = remap_form(l2, base2, base1, total_base, levels1, total);
            for (int g = 0; g < total; ++g) b[static_cast<std::size_t>(g)] += a[static_cast<std::size_t>(g)];
            lines.push_back(std::move(b));
        }
    }
    return {std::move(space), std::move(lines)};
}

Decomposition question(int a, int b, const std::optional<std::filesystem::path>& cache_dir) {
    if (a < 0 || b < 0) throw std::invalid_argument("question: a, b must be non-negative");
    auto hyperplane_generator = [](int dim) {
        SpaceTower space = SpaceTower::make({dim});
        return GeneratorSpec{std::move(space), {LinearForm{Rational(1)}}};
    };
    GeneratorSpec product = external_product(hyperplane_generator(a), hyperplane_generator(b));
    ClassSpec c{a + b, 1, {}};
    c.add(1, product);
    ChernVector target = chern_vector(c);
    Decomposition d = decompose(target, cache_dir);
    if (reconstruct(d, a + b, 1) != target)
        throw std::logic_error("question: decomposition does not reconstruct the input Chern vector");
    return d;
}

}  // namespace cobord
