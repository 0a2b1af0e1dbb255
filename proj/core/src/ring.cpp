#include "cobord/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobord {

namespace {

constexpr std::uint64_t kMaxMonomials = std::uint64_t(1) << 40;

void require_same_ring(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("TruncatedPolynomial: operands belong to different rings");
}

using Terms = std::vector<std::pair<std::uint64_t, Rational>>;

// Sort by key, merge equal keys, drop zeros.
void normalize(Terms& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::uint64_t key = terms[i].first;
        Rational sum = std::move(terms[i].second);
        for (++i; i < terms.size() && terms[i].first == key; ++i) sum += terms[i].second;
        if (!sum.is_zero()) terms[out++] = {key, std::move(sum)};
    }
    terms.resize(out);
}

}  // namespace

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

RingPtr GradedRing::make(std::vector<int> base_dims, std::vector<LinearForm> levels) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->base_dims_ = std::move(base_dims);
    ring->levels_ = std::move(levels);
    for (std::size_t i = 0; i < ring->base_dims_.size(); ++i) {
        if (ring->base_dims_[i] < 0)
            throw std::invalid_argument("GradedRing: negative projective-space dimension");
        ring->caps_.push_back(ring->base_dims_[i]);
    }
    for (std::size_t j = 0; j < ring->levels_.size(); ++j) {
        if (ring->levels_[j].size() > ring->base_dims_.size() + j)
            throw std::invalid_argument(
                "GradedRing: level class may only use generators introduced before it");
        ring->levels_[j].resize(ring->base_dims_.size() + j, Rational(0));
        ring->caps_.push_back(1);
    }
    for (int c : ring->caps_) {
        ring->strides_.push_back(ring->count_);
        ring->count_ *= static_cast<std::uint64_t>(c) + 1;
        if (ring->count_ > kMaxMonomials) throw std::invalid_argument("GradedRing: ring too large");
        ring->top_degree_ += c;
    }
    for (int g = 0; g < ring->base_count(); ++g)
        ring->base_top_key_ += static_cast<std::uint64_t>(ring->cap(g)) * ring->stride(g);
    if (!ring->levels_.empty()) {
        auto parent_levels = ring->levels_;
        parent_levels.pop_back();
        ring->parent_ = make(ring->base_dims_, std::move(parent_levels));
    }
    return ring;
}

std::uint64_t GradedRing::pack(std::span<const int> exps) const {
    std::uint64_t key = 0;
    for (int g = 0; g < generator_count(); ++g)
        key += static_cast<std::uint64_t>(exps[static_cast<std::size_t>(g)]) * strides_[static_cast<std::size_t>(g)];
    return key;
}

void GradedRing::unpack(std::uint64_t key, std::span<int> exps) const {
    for (int g = 0; g < generator_count(); ++g) {
        auto radix = static_cast<std::uint64_t>(caps_[static_cast<std::size_t>(g)]) + 1;
        exps[static_cast<std::size_t>(g)] = static_cast<int>(key % radix);
        key /= radix;
    }
}

int GradedRing::degree_of_key(std::uint64_t key) const {
    int d = 0;
    for (int g = 0; g < generator_count(); ++g) {
        auto radix = static_cast<std::uint64_t>(caps_[static_cast<std::size_t>(g)]) + 1;
        d += static_cast<int>(key % radix);
        key /= radix;
    }
    return d;
}

std::string GradedRing::generator_name(int g) const {
    if (g < base_count()) return "h" + std::to_string(g + 1);
    return "xi" + std::to_string(g - base_count() + 1);
}

TruncatedPolynomial TruncatedPolynomial::constant(RingPtr ring, Rational value) {
    TruncatedPolynomial p(std::move(ring));
    if (!value.is_zero()) p.terms_.emplace_back(0, std::move(value));
    return p;
}

TruncatedPolynomial TruncatedPolynomial::generator(RingPtr ring, int g) {
    if (g < 0 || g >= ring->generator_count())
        throw std::invalid_argument("TruncatedPolynomial::generator: index out of range");
    TruncatedPolynomial p(ring);
    if (ring->cap(g) >= 1) p.terms_.emplace_back(ring->stride(g), Rational(1));
    return p;  // a cap-0 generator (P^0 factor) is identically zero
}

TruncatedPolynomial TruncatedPolynomial::linear(RingPtr ring, const LinearForm& form) {
    if (static_cast<int>(form.size()) > ring->generator_count())
        throw std::invalid_argument("TruncatedPolynomial::linear: form has too many coefficients");
    Terms terms;
    for (std::size_t g = 0; g < form.size(); ++g) {
        if (form[g].is_zero()) continue;
        if (ring->cap(static_cast<int>(g)) < 1) continue;
        terms.emplace_back(ring->stride(static_cast<int>(g)), form[g]);
    }
    normalize(terms);
    return from_terms(std::move(ring), std::move(terms));
}

TruncatedPolynomial TruncatedPolynomial::from_terms(RingPtr ring, Terms terms) {
    TruncatedPolynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

int TruncatedPolynomial::degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, ring_->degree_of_key(key));
    return d;
}

bool TruncatedPolynomial::is_homogeneous(int d) const {
    for (const auto& [key, c] : terms_)
        if (ring_->degree_of_key(key) != d) return false;
    return true;
}

Rational TruncatedPolynomial::coefficient(std::span<const int> exps) const {
    return coefficient_of_key(ring_->pack(exps));
}

Rational TruncatedPolynomial::coefficient_of_key(std::uint64_t key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& t, std::uint64_t k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rational(0);
}

TruncatedPolynomial TruncatedPolynomial::graded_piece(int d) const {
    Terms out;
    for (const auto& [key, c] : terms_)
        if (ring_->degree_of_key(key) == d) out.emplace_back(key, c);
    return from_terms(ring_, std::move(out));
}

bool TruncatedPolynomial::operator==(const TruncatedPolynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

TruncatedPolynomial TruncatedPolynomial::operator-() const {
    Terms out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(key, -c);
    return from_terms(ring_, std::move(out));
}

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    require_same_ring(a, b);
    Terms out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i].first < b.terms_[j].first) {
            out.push_back(a.terms_[i++]);
        } else if (b.terms_[j].first < a.terms_[i].first) {
            out.push_back(b.terms_[j++]);
        } else {
            Rational sum = a.terms_[i].second + b.terms_[j].second;
            if (!sum.is_zero()) out.emplace_back(a.terms_[i].first, std::move(sum));
            ++i, ++j;
        }
    }
    out.insert(out.end(), a.terms_.begin() + static_cast<std::ptrdiff_t>(i), a.terms_.end());
    out.insert(out.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
    return TruncatedPolynomial::from_terms(a.ring_, std::move(out));
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    return a + (-b);
}

namespace {

// ξ_j² = −n_j·ξ_j rewrites; n_j only involves earlier generators, so
// scanning the highest squared level first terminates.
void reduce_term_into(const GradedRing& R, std::vector<int> e, Rational c, Terms& out) {
    int j = -1;
    for (int g = R.generator_count() - 1; g >= R.base_count(); --g)
        if (e[static_cast<std::size_t>(g)] >= 2) {
            j = g;
            break;
        }
    if (j < 0) {
        out.emplace_back(R.pack(e), std::move(c));
        return;
    }
    e[static_cast<std::size_t>(j)] -= 1;
    const LinearForm& n = R.levels()[static_cast<std::size_t>(j - R.base_count())];
    for (std::size_t g = 0; g < n.size(); ++g) {
        if (n[g].is_zero()) continue;
        auto e2 = e;
        e2[g] += 1;
        if (e2[g] > R.cap(static_cast<int>(g)) && !R.is_level(static_cast<int>(g)))
            continue;  // truncated away by h^{λ+1} = 0
        Rational c2 = -(c * n[g]);
        if (R.is_level(static_cast<int>(g)) && e2[g] > 1)
            reduce_term_into(R, std::move(e2), std::move(c2), out);
        else
            out.emplace_back(R.pack(e2), std::move(c2));
    }
}

}  // namespace

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    require_same_ring(a, b);
    const GradedRing& R = *a.ring();
    const int m = R.generator_count();
    Terms out;
    out.reserve(a.terms_.size() * b.terms_.size());
    std::vector<int> ea(static_cast<std::size_t>(m)), eb(static_cast<std::size_t>(m)),
        e(static_cast<std::size_t>(m));
    for (const auto& [ka, ca] : a.terms_) {
        R.unpack(ka, ea);
        for (const auto& [kb, cb] : b.terms_) {
            R.unpack(kb, eb);
            bool dead = false;
            bool needs_reduce = false;
            for (int g = 0; g < m; ++g) {
                int sum = ea[static_cast<std::size_t>(g)] + eb[static_cast<std::size_t>(g)];
                e[static_cast<std::size_t>(g)] = sum;
                if (sum > R.cap(g)) {
                    if (R.is_level(g)) {
                        needs_reduce = true;
                    } else {
                        dead = true;
                        break;
                    }
                }
            }
            if (dead) continue;
            Rational c = ca * cb;
            if (needs_reduce)
                reduce_term_into(R, e, std::move(c), out);
            else
                out.emplace_back(R.pack(e), std::move(c));
        }
    }
    normalize(out);
    return TruncatedPolynomial::from_terms(a.ring_, std::move(out));
}

TruncatedPolynomial operator*(const Rational& c, const TruncatedPolynomial& a) {
    if (c.is_zero()) return TruncatedPolynomial::zero(a.ring());
    Terms out;
    out.reserve(a.terms_.size());
    for (const auto& [key, v] : a.terms_) out.emplace_back(key, c * v);
    return TruncatedPolynomial::from_terms(a.ring_, std::move(out));
}

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const Rational& c) {
    return a + TruncatedPolynomial::constant(a.ring(), c);
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a, const Rational& c) {
    return a + TruncatedPolynomial::constant(a.ring(), -c);
}

TruncatedPolynomial power(const TruncatedPolynomial& a, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    TruncatedPolynomial result = TruncatedPolynomial::one(a.ring());
    for (int i = 0; i < k; ++i) result = result * a;
    return result;
}

TruncatedPolynomial pushdown(const TruncatedPolynomial& a) {
    const GradedRing& R = *a.ring();
    if (R.level_count() == 0)
        throw std::invalid_argument("pushdown: ring has no projective-bundle level");
    const int top = R.generator_count() - 1;
    const std::uint64_t stride = R.stride(top);
    Terms out;
    for (const auto& [key, c] : a.terms()) {
        // Top level has the largest stride, so its exponent is key / stride.
        if (key / stride == 1) out.emplace_back(key - stride, c);
    }
    return TruncatedPolynomial::from_terms(R.parent(), std::move(out));
}

Rational integrate(const TruncatedPolynomial& a) {
    TruncatedPolynomial p = a;
    while (p.ring()->level_count() > 0) p = pushdown(p);
    return p.coefficient_of_key(p.ring()->base_top_key());
}

TruncatedPolynomial pullback(const TruncatedPolynomial& a, const RingPtr& tower) {
    const GradedRing* anc = tower.get();
    int hops = 0;
    while (anc != nullptr && !(*anc == *a.ring())) {
        anc = anc->parent().get();
        ++hops;
    }
    if (anc == nullptr)
        throw std::invalid_argument("pullback: polynomial ring is not an ancestor of the tower");
    (void)hops;  // ancestor strides coincide, keys carry over unchanged
    return TruncatedPolynomial::from_terms(tower, {a.terms().begin(), a.terms().end()});
}

TruncatedPolynomial divide_by_one_plus(const TruncatedPolynomial& a, const TruncatedPolynomial& f) {
    if (!f.is_zero() && (f.degree() < 1 || !f.coefficient_of_key(0).is_zero()))
        throw std::invalid_argument("divide_by_one_plus: f must have zero constant term");
    // (1+f)^{-1} = Σ_{k≥0} (−f)^k, finite by nilpotency.
    TruncatedPolynomial inv = TruncatedPolynomial::one(a.ring());
    TruncatedPolynomial fk = TruncatedPolynomial::one(a.ring());
    const TruncatedPolynomial neg = -f;
    for (int k = 1; k <= a.ring()->top_degree(); ++k) {
        fk = fk * neg;
        if (fk.is_zero()) break;
        inv = inv + fk;
    }
    return a * inv;
}

std::string TruncatedPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    std::vector<int> e(static_cast<std::size_t>(ring_->generator_count()));
    for (const auto& [key, c] : terms_) {
        ring_->unpack(key, e);
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int g = 0; g < ring_->generator_count(); ++g) {
            int exp = e[static_cast<std::size_t>(g)];
            if (exp == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += ring_->generator_name(g);
            if (exp > 1) mono += '^' + std::to_string(exp);
        }
        if (mono.empty()) {
            s += c.str();
        } else if (c == Rational(1)) {
            s += mono;
        } else if (c == Rational(-1)) {
            s += "-" + mono;
        } else {
            s += c.str() + "*" + mono;
        }
    }
    return s;
}

}  // namespace cobord
