#pragma once

#include <string>
#include <utility>

#include "qgw/laurent.hpp"

namespace qgw {

// An element of Q(q): a fraction of integer Laurent polynomials kept in a
// canonical reduced form so that equality is plain field-by-field comparison.
//
// Canonical form: denominator nonzero, lowest q-exponent 0, positive leading
// coefficient; numerator and denominator share no nonconstant factor and have
// coprime integer contents. The q-power freed from the denominator is carried
// by the numerator, which stays a genuine Laurent polynomial.
class ScalarQ {
public:
    ScalarQ() : den_(1) {}
    /*implicit*/ ScalarQ(long c) : num_(c), den_(1) {}
    /*implicit*/ ScalarQ(const Int& c) : num_(c), den_(1) {}
    /*implicit*/ ScalarQ(const Rat& c) : num_(c.get_num()), den_(c.get_den()) { canonicalize(); }
    /*implicit*/ ScalarQ(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    ScalarQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static ScalarQ q_power(long e) { return ScalarQ(LaurentPoly::monomial(1, e)); }
    static ScalarQ q() { return q_power(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

    friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b) {
        if (a.den_.is_one() && b.den_.is_one()) return ScalarQ::raw(a.num_ + b.num_, LaurentPoly(1));
        return ScalarQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b) {
        if (a.den_.is_one() && b.den_.is_one()) return ScalarQ::raw(a.num_ - b.num_, LaurentPoly(1));
        return ScalarQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarQ operator-(const ScalarQ& a) { return ScalarQ::raw(-a.num_, a.den_); }
    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
        if (a.den_.is_one() && b.den_.is_one()) return ScalarQ::raw(a.num_ * b.num_, LaurentPoly(1));
        return ScalarQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return ScalarQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    ScalarQ& operator+=(const ScalarQ& o) { return *this = *this + o; }
    ScalarQ& operator-=(const ScalarQ& o) { return *this = *this - o; }
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }
    ScalarQ& operator/=(const ScalarQ& o) { return *this = *this / o; }

    ScalarQ inverse() const { return ScalarQ(1) / *this; }

    // Exact evaluation at a rational point q0 != 0. A vanishing denominator is
    // a genuine pole: the stored fraction is reduced, so num(q0) != 0 there.
    Rat eval(const Rat& q0) const {
        if (q0 == 0) throw DomainError("evaluation at q = 0 is outside the Laurent domain");
        Rat d = den_.eval(q0);
        if (d == 0) throw PoleError("pole at q = " + qgw::to_string(q0));
        return num_.eval(q0) / d;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        std::string n = num_.to_string();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        std::string d = den_.to_string();
        if (den_.terms().size() > 1 || den_.min_exp() != 0) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    // trusted constructor for values already canonical
    static ScalarQ raw(LaurentPoly num, LaurentPoly den) {
        ScalarQ s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZeroError();
        if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
        // split off q-powers so both parts are ordinary polynomials
        long vn = num_.min_exp(), vd = den_.min_exp();
        LaurentPoly n = num_.shifted(-vn), d = den_.shifted(-vd);
        LaurentPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = poly_div_exact(n, g);
            d = poly_div_exact(d, g);
        }
        Int c = int_gcd(n.content(), d.content());
        if (c != 1) {
            n = n.divided_by_int(c);
            d = d.divided_by_int(c);
        }
        if (d.leading_coeff() < 0) { n = -n; d = -d; }
        num_ = n.shifted(vn - vd);
        den_ = std::move(d);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// The quantum integer [n]_q = (q^n - q^-n)/(q - q^-1), a Laurent polynomial.
inline ScalarQ qint(long n) {
    if (n == 0) return ScalarQ(0);
    if (n < 0) return -qint(-n);
    LaurentPoly p;
    for (long i = 0; i < n; ++i) p += LaurentPoly::monomial(1, 2 * i - (n - 1));
    return ScalarQ(std::move(p));
}

inline Rat eval_at(const ScalarQ& s, const Rat& q0) { return s.eval(q0); }

} // namespace qgw
