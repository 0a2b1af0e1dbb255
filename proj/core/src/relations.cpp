#include "cobord/relations.hpp"

#include "cobord/parallel.hpp"

#include <functional>
#include <stdexcept>

namespace cobord {

namespace {

LinearForm padded(LinearForm f, int size) {
    if (static_cast<int>(f.size()) > size)
        throw std::invalid_argument("relation: class has more coefficients than generators");
    f.resize(static_cast<std::size_t>(size), Rational(0));
    return f;
}

LinearForm plus(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

LinearForm minus(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

LinearForm unit_form(int g, int size) {
    LinearForm f(static_cast<std::size_t>(size), Rational(0));
    f[static_cast<std::size_t>(g)] = 1;
    return f;
}

std::vector<LinearForm> shift_all(const std::vector<LinearForm>& lines, int size,
                                  const LinearForm& delta) {
    std::vector<LinearForm> out;
    out.reserve(lines.size());
    for (const LinearForm& l : lines) out.push_back(plus(padded(l, size), delta));
    return out;
}

ClassSpec pb_relation_on(const SpaceTower& tower, const LinearForm& nclass,
                         const std::vector<LinearForm>& lines) {
    const int gens = tower.ring->generator_count();
    const LinearForm xi = unit_form(gens - 1, gens);
    const LinearForm n = padded(nclass, gens);
    const LinearForm zero(static_cast<std::size_t>(gens), Rational(0));
    ClassSpec c{tower.dimension(), static_cast<int>(lines.size()), {}};
    c.add(1, {tower, shift_all(lines, gens, minus(zero, xi))});
    c.add(-1, {tower, shift_all(lines, gens, n)});
    c.add(1, {tower, shift_all(lines, gens, plus(n, xi))});
    c.add(-1, {tower, shift_all(lines, gens, zero)});
    return c;
}

ClassSpec first_relation_on(const SpaceTower& tower, const SpaceTower& dual_tower,
                            const LinearForm& nclass, const std::vector<LinearForm>& lines) {
    const int gens = tower.ring->generator_count();
    const LinearForm xi = unit_form(gens - 1, gens);
    const LinearForm n = padded(nclass, gens);
    const LinearForm zero(static_cast<std::size_t>(gens), Rational(0));
    ClassSpec c{tower.dimension(), static_cast<int>(lines.size()), {}};
    c.add(1, {tower, shift_all(lines, gens, zero)});
    c.add(-1, {tower, shift_all(lines, gens, xi)});
    c.add(-1, {dual_tower, shift_all(lines, gens, minus(zero, xi))});
    c.add(1, {tower, shift_all(lines, gens, minus(zero, n))});
    return c;
}

ClassSpec nc_relation_on(const SpaceTower& ambient, const SpaceTower& cone_tower,
                         const LinearForm& zclass, const std::vector<LinearForm>& lines) {
    const int base_gens = ambient.ring->generator_count();
    const int cone_gens = cone_tower.ring->generator_count();
    const LinearForm xi = unit_form(cone_gens - 1, cone_gens);
    const LinearForm z_base = padded(zclass, base_gens);
    const LinearForm z_cone = padded(zclass, cone_gens);
    const LinearForm zero_base(static_cast<std::size_t>(base_gens), Rational(0));
    ClassSpec c{ambient.dimension(), static_cast<int>(lines.size()), {}};
    c.add(1, {ambient, shift_all(lines, base_gens, zero_base)});
    c.add(-1, {ambient, shift_all(lines, base_gens, z_base)});
    c.add(-1, {cone_tower, shift_all(lines, cone_gens, minus(LinearForm(static_cast<std::size_t>(cone_gens), Rational(0)), xi))});
    c.add(1, {cone_tower, shift_all(lines, cone_gens, z_cone)});
    return c;
}

}  // namespace

ClassSpec projective_bundle_relation(const Partition& lambda, const LinearForm& nclass,
                                     const std::vector<LinearForm>& lines) {
    SpaceTower tower = SpaceTower::make(lambda.parts(), {padded(nclass, lambda.length())});
    return pb_relation_on(tower, nclass, lines);
}

ClassSpec first_bundle_relation(const Partition& lambda, const LinearForm& nclass,
                                const std::vector<LinearForm>& lines) {
    LinearForm n = padded(nclass, lambda.length());
    LinearForm neg(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
    SpaceTower tower = SpaceTower::make(lambda.parts(), {n});
    SpaceTower dual_tower = SpaceTower::make(lambda.parts(), {std::move(neg)});
    return first_relation_on(tower, dual_tower, nclass, lines);
}

ClassSpec normal_cone_relation(const Partition& lambda, const LinearForm& zclass,
                               const std::vector<LinearForm>& lines) {
    LinearForm z = padded(zclass, lambda.length());
    SpaceTower ambient = SpaceTower::projective(lambda);
    SpaceTower cone_tower = SpaceTower::make(lambda.parts(), {z}, padded(z, lambda.length() + 1));
    return nc_relation_on(ambient, cone_tower, zclass, lines);
}

VanishingReport verify_vanishing(const ClassSpec& c, EngineCache* cache) {
    ChernVector v = chern_vector(c, cache);
    VanishingReport report;
    const auto monomials = enumerate_monomials(c.n, c.r);
    for (std::size_t i = 0; i < v.values.size(); ++i) {
        if (!v.values[i].is_zero()) {
            report.passed = false;
            report.nonzero.emplace_back(monomials[i], v.values[i]);
        }
    }
    return report;
}

const char* family_name(RelationFamily f) {
    switch (f) {
        case RelationFamily::ProjectiveBundle: return "pb";
        case RelationFamily::FirstBundle: return "pb-first";
        case RelationFamily::NormalCone: return "nc";
    }
    return "?";
}

std::string RelationCase::str() const {
    std::string s = std::string(family_name(family)) + " lambda=" + lambda.str() + " class=(";
    for (std::size_t i = 0; i < divisor_class.size(); ++i) {
        if (i > 0) s += ',';
        s += divisor_class[i].str();
    }
    s += ") lines=[";
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k > 0) s += ';';
        s += '(';
        for (std::size_t i = 0; i < lines[k].size(); ++i) {
            if (i > 0) s += ',';
            s += lines[k][i].str();
        }
        s += ')';
    }
    return s + "]";
}

namespace {

// All coefficient vectors of the given length over {lo..hi}.
std::vector<LinearForm> coefficient_grid(int length, int lo, int hi) {
    std::vector<LinearForm> out;
    LinearForm current(static_cast<std::size_t>(length), Rational(0));
    std::function<void(int)> rec = [&](int i) {
        if (i == length) {
            out.push_back(current);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            current[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// 0, 1 or 2 line classes with coefficients in {−1,0,1}.
std::vector<std::vector<LinearForm>> line_tuples(int length) {
    std::vector<LinearForm> single = coefficient_grid(length, -1, 1);
    std::vector<std::vector<LinearForm>> out;
    out.push_back({});
    for (const LinearForm& a : single) out.push_back({a});
    for (const LinearForm& a : single)
        for (const LinearForm& b : single) out.push_back({a, b});
    return out;
}

}  // namespace

SuiteReport run_relation_suite(RelationFamily family, int max_dim) {
    SuiteReport report;
    const int max_lambda_weight =
        family == RelationFamily::NormalCone ? max_dim : max_dim - 1;
    for (int w = 0; w <= max_lambda_weight; ++w) {
        for (const Partition& lambda : enumerate_partitions(w)) {
            const int ell = lambda.length();
            std::vector<LinearForm> divisors;
            if (family == RelationFamily::NormalCone) {
                for (int factor = 0; factor < ell; ++factor)
                    for (int d = 1; d <= 3; ++d) {
                        LinearForm z(static_cast<std::size_t>(ell), Rational(0));
                        z[static_cast<std::size_t>(factor)] = d;
                        divisors.push_back(std::move(z));
                    }
            } else {
                divisors = coefficient_grid(ell, -2, 2);
            }
            const std::vector<std::vector<LinearForm>> tuples = line_tuples(ell);
            for (const LinearForm& divisor : divisors) {
                // Towers shared by every line choice below.
                SpaceTower tower_a, tower_b;
                if (family == RelationFamily::NormalCone) {
                    tower_a = SpaceTower::projective(lambda);
                    LinearForm z = divisor;
                    tower_b = SpaceTower::make(lambda.parts(), {divisor},
                                               padded(std::move(z), ell + 1));
                } else {
                    tower_a = SpaceTower::make(lambda.parts(), {divisor});
                    if (family == RelationFamily::FirstBundle) {
                        LinearForm neg(divisor.size());
                        for (std::size_t i = 0; i < divisor.size(); ++i) neg[i] = -divisor[i];
                        tower_b = SpaceTower::make(lambda.parts(), {std::move(neg)});
                    }
                }
                std::vector<SuiteReport> partial(thread_count());
                parallel_for_chunks(tuples.size(), [&](std::size_t begin, std::size_t end,
                                                       unsigned worker) {
                    EngineCache engines;
                    SuiteReport& local = partial[worker];
                    for (std::size_t t = begin; t < end; ++t) {
                        ClassSpec c =
                            family == RelationFamily::ProjectiveBundle
                                ? pb_relation_on(tower_a, divisor, tuples[t])
                                : family == RelationFamily::FirstBundle
                                      ? first_relation_on(tower_a, tower_b, divisor, tuples[t])
                                      : nc_relation_on(tower_a, tower_b, divisor, tuples[t]);
                        VanishingReport v = verify_vanishing(c, &engines);
                        ++local.cases;
                        if (v.passed)
                            ++local.passes;
                        else
                            local.failures.emplace_back(
                                RelationCase{family, lambda, divisor, tuples[t]}, std::move(v));
                    }
                });
                for (SuiteReport& local : partial) {
                    report.cases += local.cases;
                    report.passes += local.passes;
                    for (auto& f : local.failures) report.failures.push_back(std::move(f));
                }
            }
        }
    }
    return report;
}

}  // namespace cobord
