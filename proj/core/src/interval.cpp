#include "isoverify/interval.hpp"

#include <algorithm>

namespace isoverify {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw InvalidArgument("interval endpoints out of order");
}

RationalInterval RationalInterval::operator+(const RationalInterval& o) const {
    return RationalInterval(lo_ + o.lo_, hi_ + o.hi_);
}

RationalInterval RationalInterval::operator-(const RationalInterval& o) const {
    return RationalInterval(lo_ - o.hi_, hi_ - o.lo_);
}

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
    const Rational p1 = lo_ * o.lo_;
    const Rational p2 = lo_ * o.hi_;
    const Rational p3 = hi_ * o.lo_;
    const Rational p4 = hi_ * o.hi_;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return RationalInterval(lo, hi);
}

RationalInterval RationalInterval::operator/(const RationalInterval& o) const {
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0)
        throw DivisionByZero("division by an interval containing zero");
    return *this * RationalInterval(o.hi_.inverse(), o.lo_.inverse());
}

RationalInterval RationalInterval::operator+(const Rational& r) const {
    return RationalInterval(lo_ + r, hi_ + r);
}

RationalInterval RationalInterval::operator-(const Rational& r) const {
    return RationalInterval(lo_ - r, hi_ - r);
}

RationalInterval RationalInterval::operator*(const Rational& r) const {
    if (r.sign() >= 0) return RationalInterval(lo_ * r, hi_ * r);
    return RationalInterval(hi_ * r, lo_ * r);
}

RationalInterval RationalInterval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return RationalInterval(Rational(0), std::max(-lo_, hi_, RationalLess{}));
}

RationalInterval sqrt_enclosure(const Rational& x, const Rational& width) {
    if (x.sign() < 0) throw InvalidArgument("sqrt of a negative rational");
    if (width.sign() <= 0) throw InvalidArgument("nonpositive target width");
    if (x.is_zero()) return RationalInterval(Rational(0));
    // sqrt(p/q) = sqrt(p*q)/q; scale by k so that the 1/(q*k) grid resolves `width`.
    const Int& p = x.num();
    const Int& q = x.den();
    Int k = cdiv(width.den(), width.num() * q);
    if (k < 1) k = 1;
    Int s = isqrt(p * q * k * k);
    Int den = q * k;
    return RationalInterval(Rational(s, den), Rational(s + 1, den));
}

}  // namespace isoverify
