#include "cobord/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cobord {

Rational::Rational(mpz_class numerator, mpz_class denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = !num.empty() && num.front() == '-';
    if (neg) num.remove_prefix(1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel first: keeps intermediates small and the result reduced.
    mpz_class g1 = gcd(num_, o.den_);
    mpz_class g2 = gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (sgn(inv.den_) < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace cobord
