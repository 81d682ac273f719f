#pragma once

#include <string>

#include "adm/rational.hpp"

namespace adm {

// Element p + q*zeta of Q(zeta_6), where zeta is a primitive sixth root of
// unity satisfying zeta^2 = zeta - 1. Conjugation sends zeta to 1 - zeta,
// so conj(p + q*zeta) = (p + q) - q*zeta, and zeta * conj(zeta) = 1.
class Cyclotomic6 {
  public:
    Cyclotomic6() : p_(0), q_(0) {}
    Cyclotomic6(Rational p) : p_(std::move(p)), q_(0) {}  // NOLINT
    Cyclotomic6(long long p) : p_(p), q_(0) {}            // NOLINT
    Cyclotomic6(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

    static Cyclotomic6 zeta() { return {Rational(0), Rational(1)}; }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    Cyclotomic6 conj() const { return {p_ + q_, -q_}; }

    Cyclotomic6 operator-() const { return {-p_, -q_}; }
    Cyclotomic6 operator+(const Cyclotomic6& o) const { return {p_ + o.p_, q_ + o.q_}; }
    Cyclotomic6 operator-(const Cyclotomic6& o) const { return {p_ - o.p_, q_ - o.q_}; }
    Cyclotomic6 operator*(const Cyclotomic6& o) const {
        // (p1 + q1 z)(p2 + q2 z) with z^2 = z - 1.
        return {p_ * o.p_ - q_ * o.q_, p_ * o.q_ + q_ * o.p_ + q_ * o.q_};
    }
    Cyclotomic6 operator/(const Cyclotomic6& o) const {
        Rational n = o.p_ * o.p_ + o.p_ * o.q_ + o.q_ * o.q_;  // o * conj(o)
        if (n.is_zero()) throw PreconditionError("division by zero in Q(zeta_6)");
        Cyclotomic6 r = *this * o.conj();
        return {r.p_ / n, r.q_ / n};
    }
    Cyclotomic6& operator+=(const Cyclotomic6& o) { return *this = *this + o; }
    Cyclotomic6& operator*=(const Cyclotomic6& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic6& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Cyclotomic6& o) const { return !(*this == o); }

    std::string str() const {
        if (q_.is_zero()) return p_.str();
        std::string s;
        if (!p_.is_zero()) s = p_.str() + (q_ < Rational(0) ? " - " : " + ");
        else if (q_ < Rational(0)) s = "-";
        Rational aq = q_ < Rational(0) ? -q_ : q_;
        s += aq.is_one() ? "zeta" : aq.str() + "*zeta";
        return s;
    }

  private:
    Rational p_, q_;
};

// zeta^n with n reduced mod 6 (zeta^6 = 1); accepts negative exponents.
inline Cyclotomic6 zeta_pow(long long n) {
    long long m = ((n % 6) + 6) % 6;
    static const Rational r0(0), r1(1), rm1(-1);
    switch (m) {
        case 0: return {r1, r0};
        case 1: return {r0, r1};
        case 2: return {rm1, r1};   // zeta - 1
        case 3: return {rm1, r0};   // -1
        case 4: return {r0, rm1};   // -zeta
        default: return {r1, rm1};  // 1 - zeta
    }
}

}  // namespace adm
