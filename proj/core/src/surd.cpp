#include "isoverify/surd.hpp"

#include "factor.hpp"

namespace isoverify {

QuadraticSurd::QuadraticSurd(Int a, Int b, Int c, Int d, const Budget& budget)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw DivisionByZero("surd with zero denominator");
    if (d_ < 0) throw InvalidArgument("negative radicand");
    if (b_ != 0 && d_ > 1) {
        auto parts = detail::square_free_decompose(d_, budget);
        b_ *= parts.square_root;
        d_ = parts.squarefree;
    }
    normalize_no_factor();
}

QuadraticSurd::QuadraticSurd(Int a, Int b, Int c, Int d, Canonical)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize_no_factor();
}

void QuadraticSurd::normalize_no_factor() {
    if (d_ <= 1) {  // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (b_ == 0) d_ = 0;
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (a_ == 0 && b_ == 0) {
        c_ = 1;
        return;
    }
    Int g = gcd(gcd(::abs(a_), ::abs(b_)), c_);
    if (g != 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadraticSurd QuadraticSurd::sqrt_of(const Rational& r, const Budget& budget) {
    if (r.sign() < 0) throw InvalidArgument("square root of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q
    return QuadraticSurd(0, 1, r.den(), r.num() * r.den(), budget);
}

QuadraticSurd QuadraticSurd::from_square_free(Int a, Int b, Int c, Int d) {
    if (c == 0) throw DivisionByZero("surd with zero denominator");
    if (d < 0) throw InvalidArgument("negative radicand");
    return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d), Canonical{});
}

Rational QuadraticSurd::to_rational() const {
    if (!is_rational()) throw InvalidArgument("surd is irrational: " + str());
    return Rational(a_, c_);
}

int QuadraticSurd::sign() const {
    // c > 0, so the sign is that of a + b*sqrt(d).
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d. Equality would force
    // sqrt(d) rational, impossible for square-free d >= 2.
    Int lhs = a_ * a_;
    Int rhs = b_ * b_ * d_;
    int t = ::cmp(lhs, rhs);
    return sa > 0 ? t : -t;
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-a_, -b_, c_, d_, Canonical{}); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(a_, -b_, c_, d_, Canonical{}); }

namespace {
const Int& unified_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    if (x.d() != y.d())
        throw MixedField("arithmetic between " + x.str() + " and " + y.str() +
                         " mixes distinct radicands");
    return x.d();
}
}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    const Int& d = unified_radicand(*this, o);
    return QuadraticSurd(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d, Canonical{});
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const { return *this + (-o); }

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    const Int& d = unified_radicand(*this, o);
    return QuadraticSurd(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, c_ * o.c_, d, Canonical{});
}

QuadraticSurd QuadraticSurd::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero surd");
    // 1 / ((a + b sqrt d)/c) = c (a - b sqrt d) / (a^2 - b^2 d);
    // the norm a^2 - b^2 d is nonzero for nonzero values.
    Int norm = a_ * a_ - b_ * b_ * d_;
    return QuadraticSurd(c_ * a_, -(c_ * b_), std::move(norm), d_, Canonical{});
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const { return *this * o.inverse(); }

std::optional<Rational> QuadraticSurd::rational_square() const {
    if (is_rational()) {
        Rational r = to_rational();
        return r * r;
    }
    if (a_ == 0) return Rational(b_ * b_ * d_, c_ * c_);
    return std::nullopt;
}

Int QuadraticSurd::floor() const {
    if (is_rational()) return fdiv(a_, c_);
    // |b| sqrt(d) lies in [t, t+1) with t = isqrt(b^2 d).
    Int t = isqrt(b_ * b_ * d_);
    Int low_num = b_ > 0 ? Int(a_ + t) : Int(a_ - t - 1);
    Int n = fdiv(low_num, c_);
    while (cmp(Rational(n + 1)) >= 0) ++n;
    while (cmp(Rational(n)) < 0) --n;
    return n;
}

RationalInterval QuadraticSurd::enclose(const Rational& width) const {
    if (width.sign() <= 0) throw InvalidArgument("nonpositive target width");
    if (is_rational()) return RationalInterval(to_rational());
    // Scale by k so the 1/(k c) grid resolves `width`.
    Int k = cdiv(width.den(), width.num() * c_);
    if (k < 1) k = 1;
    Int t = isqrt(b_ * b_ * d_ * k * k);  // k |b| sqrt(d) in [t, t+1)
    Int ka = k * a_;
    Int den = k * c_;
    if (b_ > 0) return RationalInterval(Rational(ka + t, den), Rational(ka + t + 1, den));
    return RationalInterval(Rational(ka - t - 1, den), Rational(ka - t, den));
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return to_rational().str();
    std::string root = "sqrt(" + to_string(d_) + ")";
    std::string radical;
    if (b_ == 1)
        radical = root;
    else if (b_ == -1)
        radical = "-" + root;
    else
        radical = to_string(b_) + "*" + root;
    std::string num;
    if (a_ == 0) {
        num = radical;
    } else {
        num = to_string(a_) + (b_ > 0 ? "+" : "") + radical;
    }
    if (c_ == 1) return num;
    if (a_ != 0) return "(" + num + ")/" + to_string(c_);
    return num + "/" + to_string(c_);
}

}  // namespace isoverify
