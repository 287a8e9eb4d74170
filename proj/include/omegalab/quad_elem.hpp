#pragma once

// Elements u + v*sqrt(d) of Q(sqrt(d)) with exact rational coordinates.
// d is a fixed square-free positive integer per value; arithmetic across
// distinct radicands is an error.

#include "omegalab/ring.hpp"

#include <ostream>

namespace omegalab {

class QuadElem {
public:
    QuadElem(unsigned long d, ExactRational u, ExactRational v)
        : d_(d), u_(std::move(u)), v_(std::move(v)) {
        u_.canonicalize();
        v_.canonicalize();
    }

    unsigned long radicand() const { return d_; }
    const ExactRational& rational_part() const { return u_; }
    const ExactRational& radical_part() const { return v_; }

    QuadElem conjugate() const { return QuadElem(d_, u_, -v_); }

    // u^2 - d v^2, the field norm.
    ExactRational norm() const { return u_ * u_ - ExactRational(static_cast<long>(d_)) * v_ * v_; }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        a.require_same(b);
        return QuadElem(a.d_, a.u_ + b.u_, a.v_ + b.v_);
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        a.require_same(b);
        return QuadElem(a.d_, a.u_ - b.u_, a.v_ - b.v_);
    }
    friend QuadElem operator-(const QuadElem& a) { return QuadElem(a.d_, -a.u_, -a.v_); }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        a.require_same(b);
        ExactRational d(static_cast<long>(a.d_));
        return QuadElem(a.d_, a.u_ * b.u_ + d * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_);
    }
    QuadElem& operator+=(const QuadElem& b) { return *this = *this + b; }
    QuadElem& operator-=(const QuadElem& b) { return *this = *this - b; }
    QuadElem& operator*=(const QuadElem& b) { return *this = *this * b; }

    // componentwise; valid because sqrt(d) is irrational
    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& q) {
        return os << q.u_ << "+" << q.v_ << "*sqrt(" << q.d_ << ")";
    }

private:
    void require_same(const QuadElem& b) const {
        if (d_ != b.d_)
            throw std::invalid_argument("QuadElem: mixing distinct radicands " +
                                        std::to_string(d_) + " and " + std::to_string(b.d_));
    }

    unsigned long d_;
    ExactRational u_, v_;
};

inline QuadElem zero_like(const QuadElem& x) { return QuadElem(x.radicand(), 0, 0); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem(x.radicand(), 1, 0); }
inline QuadElem from_int_like(const QuadElem& x, long v) {
    return QuadElem(x.radicand(), ExactRational(v), 0);
}
inline QuadElem from_exact_int_like(const QuadElem& x, const ExactInt& v) {
    return QuadElem(x.radicand(), ExactRational(v), 0);
}
inline bool is_zero(const QuadElem& x) {
    return sgn(x.rational_part()) == 0 && sgn(x.radical_part()) == 0;
}

inline QuadElem exact_div(const QuadElem& a, const QuadElem& b) {
    if (is_zero(b)) throw DivideByZero();
    ExactRational nb = b.norm();  // nonzero: d square-free, b nonzero
    QuadElem num = a * b.conjugate();
    return QuadElem(a.radicand(), num.rational_part() / nb, num.radical_part() / nb);
}

inline QuadElem scale_exact(const QuadElem& x, const ExactRational& s) {
    return QuadElem(x.radicand(), x.rational_part() * s, x.radical_part() * s);
}

}  // namespace omegalab
