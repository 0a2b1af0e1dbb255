#include "linalg.hpp"

#include <algorithm>
#include <utility>

namespace cobord::detail {

namespace {

Rational determinant_bareiss(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpz_class det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(std::move(det));
}

Rational determinant_rational(RationalMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

}  // namespace

Rational determinant_exact(const RationalMatrix& m) {
    bool integral = true;
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_integer()) {
                integral = false;
                break;
            }
    if (integral) {
        std::vector<std::vector<mpz_class>> z(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (const auto& v : m[i]) z[i].push_back(v.numerator());
        return determinant_bareiss(std::move(z));
    }
    return determinant_rational(m);
}

std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            std::swap(a[k], a[pivot]);
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            b[i] -= factor * b[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational sum = b[i];
        for (std::size_t j = i + 1; j < n; ++j) sum -= a[i][j] * x[j];
        x[i] = sum / a[i][i];
    }
    return x;
}

}  // namespace cobord::detail
