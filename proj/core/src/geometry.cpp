#include "cobord/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobord {

SpaceTower SpaceTower::projective(const Partition& lambda) { return make(lambda.parts()); }

SpaceTower SpaceTower::make(std::vector<int> base, std::vector<LinearForm> levels,
                            std::optional<LinearForm> multiplier) {
    SpaceTower t;
    t.ring = GradedRing::make(base, levels);
    t.base = std::move(base);
    t.levels = t.ring->levels();  // zero-padded by the ring
    if (multiplier) {
        if (static_cast<int>(multiplier->size()) > t.ring->generator_count())
            throw std::invalid_argument("SpaceTower: multiplier has too many coefficients");
        multiplier->resize(static_cast<std::size_t>(t.ring->generator_count()), Rational(0));
        t.multiplier = std::move(multiplier);
    }
    if (t.dimension() < 0) throw std::invalid_argument("SpaceTower: negative dimension");
    return t;
}

int SpaceTower::dimension() const {
    int d = 0;
    for (int b : base) d += b;
    d += static_cast<int>(levels.size());
    if (multiplier) d -= 1;
    return d;
}

void ClassSpec::add(Rational coeff, GeneratorSpec generator) {
    if (generator.dimension() != n || generator.rank() != r)
        throw std::invalid_argument("ClassSpec: generator has dimension " +
                                    std::to_string(generator.dimension()) + ", rank " +
                                    std::to_string(generator.rank()) + "; expected (" +
                                    std::to_string(n) + ", " + std::to_string(r) + ")");
    terms.emplace_back(std::move(coeff), std::move(generator));
}

void ClassSpec::validate() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const GeneratorSpec& g = terms[i].second;
        if (g.dimension() != n || g.rank() != r)
            throw std::invalid_argument("ClassSpec: term " + std::to_string(i) +
                                        " has dimension " + std::to_string(g.dimension()) +
                                        ", rank " + std::to_string(g.rank()) + "; expected (" +
                                        std::to_string(n) + ", " + std::to_string(r) + ")");
    }
}

bool ChernVector::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
}

TruncatedPolynomial tangent_total_chern(const SpaceTower& space) {
    const RingPtr& R = space.ring;
    TruncatedPolynomial c = TruncatedPolynomial::one(R);
    for (int i = 0; i < R->base_count(); ++i) {
        TruncatedPolynomial factor = TruncatedPolynomial::generator(R, i) + Rational(1);
        c = c * power(factor, space.base[static_cast<std::size_t>(i)] + 1);
    }
    for (int j = 0; j < R->level_count(); ++j) {
        TruncatedPolynomial xi = TruncatedPolynomial::generator(R, R->base_count() + j);
        TruncatedPolynomial n = TruncatedPolynomial::linear(R, space.levels[static_cast<std::size_t>(j)]);
        c = c * (xi + Rational(1)) * (xi + n + Rational(1));
    }
    if (space.multiplier)
        c = divide_by_one_plus(c, TruncatedPolynomial::linear(R, *space.multiplier));
    return c;
}

std::vector<TruncatedPolynomial> split_chern_classes(const RingPtr& ring,
                                                     const std::vector<LinearForm>& lines) {
    std::vector<TruncatedPolynomial> e(lines.size() + 1, TruncatedPolynomial::zero(ring));
    e[0] = TruncatedPolynomial::one(ring);
    std::size_t used = 0;
    for (const LinearForm& form : lines) {
        TruncatedPolynomial root = TruncatedPolynomial::linear(ring, form);
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + e[k - 1] * root;
    }
    return e;
}

ChernEngine::ChernEngine(SpaceTower tower) : tower_(std::move(tower)) {
    TruncatedPolynomial total = tangent_total_chern(tower_);
    for (int d = 0; d <= tower_.ring->top_degree(); ++d)
        tangent_pieces_.push_back(total.graded_piece(d));
    TruncatedPolynomial f =
        tower_.multiplier ? TruncatedPolynomial::linear(tower_.ring, *tower_.multiplier)
                          : TruncatedPolynomial::one(tower_.ring);
    memo_.emplace(std::vector<int>{}, std::move(f));
}

const TruncatedPolynomial& ChernEngine::weighted_tangent_monomial(const Partition& nu) {
    auto it = memo_.find(nu.parts());
    if (it != memo_.end()) return it->second;
    // Peel off the first (largest) part; the remainder is again a partition.
    std::vector<int> rest(nu.parts().begin() + 1, nu.parts().end());
    int head = nu.parts().front();
    const TruncatedPolynomial& tail = weighted_tangent_monomial(Partition(rest));
    TruncatedPolynomial value =
        head <= tower_.ring->top_degree()
            ? tail * tangent_pieces_[static_cast<std::size_t>(head)]
            : TruncatedPolynomial::zero(tower_.ring);
    return memo_.emplace(nu.parts(), std::move(value)).first->second;
}

Rational ChernEngine::invariant(const std::vector<TruncatedPolynomial>& bundle_chern,
                                const MonomialIndex& theta) {
    if (theta.degree() != tower_.dimension())
        throw std::invalid_argument("chern_invariant: monomial degree " +
                                    std::to_string(theta.degree()) + " != space dimension " +
                                    std::to_string(tower_.dimension()));
    TruncatedPolynomial v = TruncatedPolynomial::one(tower_.ring);
    for (int part : theta.mu().parts()) {
        if (part >= static_cast<int>(bundle_chern.size())) return Rational(0);
        v = v * bundle_chern[static_cast<std::size_t>(part)];
        if (v.is_zero()) return Rational(0);
    }
    return integrate(weighted_tangent_monomial(theta.nu()) * v);
}

ChernEngine& EngineCache::engine_for(const SpaceTower& tower) {
    auto key = std::make_pair(tower.ring.get(), tower.multiplier);
    auto it = engines_.find(key);
    if (it == engines_.end())
        it = engines_.emplace(std::move(key), std::make_unique<ChernEngine>(tower)).first;
    return *it->second;
}

Rational chern_invariant(const GeneratorSpec& g, const MonomialIndex& theta) {
    ChernEngine engine(g.space);
    return engine.invariant(split_chern_classes(g.space.ring, g.lines), theta);
}

ChernVector chern_vector(const ClassSpec& c, EngineCache* cache) {
    c.validate();
    const std::vector<MonomialIndex> monomials = enumerate_monomials(c.n, c.r);
    ChernVector result{c.n, c.r, std::vector<Rational>(monomials.size(), Rational(0))};
    EngineCache local;
    EngineCache& engines = cache ? *cache : local;
    for (const auto& [coeff, generator] : c.terms) {
        if (coeff.is_zero()) continue;
        ChernEngine& engine = engines.engine_for(generator.space);
        auto bundle = split_chern_classes(generator.space.ring, generator.lines);
        // Memoize the v-monomials of this bundle across the column loop.
        std::map<std::vector<int>, TruncatedPolynomial> v_memo;
        v_memo.emplace(std::vector<int>{}, TruncatedPolynomial::one(generator.space.ring));
        std::function<const TruncatedPolynomial&(const Partition&)> v_monomial =
            [&](const Partition& mu) -> const TruncatedPolynomial& {
            auto it = v_memo.find(mu.parts());
            if (it != v_memo.end()) return it->second;
            std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
            int head = mu.parts().front();
            const TruncatedPolynomial& tail = v_monomial(Partition(rest));
            TruncatedPolynomial value = head < static_cast<int>(bundle.size())
                                            ? tail * bundle[static_cast<std::size_t>(head)]
                                            : TruncatedPolynomial::zero(generator.space.ring);
            return v_memo.emplace(mu.parts(), std::move(value)).first->second;
        };
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            const TruncatedPolynomial& v = v_monomial(monomials[i].mu());
            if (v.is_zero()) continue;
            Rational value = integrate(engine.weighted_tangent_monomial(monomials[i].nu()) * v);
            if (!value.is_zero()) result.values[i] += coeff * value;
        }
    }
    return result;
}

GeneratorSpec phi(const PartitionPair& pair, int r) {
    if (!is_valid_pair(pair, pair.lambda.weight(), r))
        throw std::invalid_argument("phi: " + pair.str() + " is not a valid pair for type r = " +
                                    std::to_string(r));
    SpaceTower space = SpaceTower::projective(pair.lambda);
    const int ell = pair.lambda.length();
    std::vector<LinearForm> lines(static_cast<std::size_t>(r - pair.mu.length()));
    std::vector<bool> used(static_cast<std::size_t>(ell), false);
    for (int part : pair.mu.parts()) {
        LinearForm line(static_cast<std::size_t>(ell), Rational(0));
        bool found = false;
        for (int i = 0; i < ell; ++i) {
            if (!used[static_cast<std::size_t>(i)] && pair.lambda.parts()[static_cast<std::size_t>(i)] == part) {
                used[static_cast<std::size_t>(i)] = true;
                line[static_cast<std::size_t>(i)] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("phi: no free factor for part " + std::to_string(part));
        lines.push_back(std::move(line));
    }
    return {std::move(space), std::move(lines)};
}

GeneratorSpec phi_list(const PartitionList& list) {
    if (!is_valid_list(list, list.lambda.weight(), static_cast<int>(list.m.size())))
        throw std::invalid_argument("phi_list: " + list.str() + " is not a valid partition list");
    SpaceTower space = SpaceTower::projective(list.lambda);
    const int ell = list.lambda.length();
    std::vector<LinearForm> lines;
    std::vector<bool> used(static_cast<std::size_t>(ell), false);
    for (int part : list.m) {
        LinearForm line(static_cast<std::size_t>(ell), Rational(0));
        if (part > 0) {
            bool found = false;
            for (int i = 0; i < ell; ++i) {
                if (!used[static_cast<std::size_t>(i)] &&
                    list.lambda.parts()[static_cast<std::size_t>(i)] == part) {
                    used[static_cast<std::size_t>(i)] = true;
                    line[static_cast<std::size_t>(i)] = 1;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("phi_list: no free factor for part " + std::to_string(part));
        }
        lines.push_back(std::move(line));
    }
    return {std::move(space), std::move(lines)};
}

namespace {

std::string space_name(const GeneratorSpec& g) {
    if (g.space.base.empty()) return "P0";
    std::string s;
    for (std::size_t i = 0; i < g.space.base.size(); ++i) {
        if (i > 0) s += 'x';
        s += 'P' + std::to_string(g.space.base[static_cast<std::size_t>(i)]);
    }
    if (!g.space.levels.empty()) s += "{+" + std::to_string(g.space.levels.size()) + " levels}";
    if (g.space.multiplier) s += "{cut}";
    return s;
}

bool form_is_zero(const LinearForm& f) {
    return std::all_of(f.begin(), f.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string line_name(const GeneratorSpec& g, const LinearForm& form) {
    if (form_is_zero(form)) return "O";
    std::size_t width = g.space.base.size();
    for (std::size_t i = width; i < form.size(); ++i)
        if (!form[i].is_zero()) width = form.size();  // tower line: show everything
    std::string s = "O(";
    for (std::size_t i = 0; i < width; ++i) {
        if (i > 0) s += ',';
        s += i < form.size() ? form[i].str() : "0";
    }
    return s + ")";
}

}  // namespace

std::string class_name(const GeneratorSpec& g) {
    std::string s = "[" + space_name(g);
    if (g.rank() > 0) {
        s += ", ";
        bool all_trivial =
            std::all_of(g.lines.begin(), g.lines.end(), [](const LinearForm& f) { return form_is_zero(f); });
        if (all_trivial && g.rank() >= 2) {
            s += "O^" + std::to_string(g.rank());
        } else {
            for (int i = 0; i < g.rank(); ++i) {
                if (i > 0) s += '+';
                s += line_name(g, g.lines[static_cast<std::size_t>(i)]);
            }
        }
    }
    return s + "]";
}

std::string list_name(const GeneratorSpec& g) {
    std::string s = "[" + space_name(g) + ", (";
    for (int i = 0; i < g.rank(); ++i) {
        if (i > 0) s += ',';
        s += line_name(g, g.lines[static_cast<std::size_t>(i)]);
    }
    return s + ")]";
}

}  // namespace cobord
