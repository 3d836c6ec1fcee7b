#include "rene/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace rene {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw ZeroDenominator("rational denominator is zero");
    }
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_.backend().negate();
        den_.backend().negate();
    }
    BigInt g = gcd_of(abs_of(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&] { throw Error("malformed rational literal: '" + std::string(text) + "'"); };
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&]() -> BigInt {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        return BigInt(std::string(text.substr(start, i - start)));
    };
    BigInt num = digits();
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits();
    }
    if (i != text.size()) fail();
    if (neg) num.backend().negate();
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_.backend().negate();
    return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace rene
