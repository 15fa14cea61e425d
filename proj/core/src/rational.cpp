#include "isoverify/rational.hpp"

namespace isoverify {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::str() const {
    std::string s = to_string(num_);
    if (den_ != 1) s += "/" + to_string(den_);
    return s;
}

Rational Rational::parse(std::string_view text) {
    const std::string input(text);
    auto parse_part = [&](std::string_view part, std::size_t base_offset) -> Int {
        if (part.empty()) throw ParseError("expected integer", input, base_offset);
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw ParseError("expected digits after sign", input, base_offset + i);
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9')
                throw ParseError("unexpected character in integer", input, base_offset + j);
        }
        Int value(std::string(part.substr(i)));
        return part[0] == '-' ? Int(-value) : value;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_part(text, 0));
    Int num = parse_part(text.substr(0, slash), 0);
    Int den = parse_part(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", input, slash + 1);
    return Rational(num, den);
}

}  // namespace isoverify
