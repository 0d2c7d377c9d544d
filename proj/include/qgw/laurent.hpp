#pragma once

#include <map>
#include <string>
#include <utility>

#include "qgw/arith.hpp"

namespace qgw {

// Sparse Laurent polynomial in one variable with Int coefficients,
// stored as exponent -> nonzero coefficient.
class LaurentPoly {
public:
    using Table = std::map<long, Int>;

    LaurentPoly() = default;
    /*implicit*/ LaurentPoly(long c) { if (c != 0) coef_[0] = c; }
    /*implicit*/ LaurentPoly(const Int& c) { if (c != 0) coef_[0] = c; }

    static LaurentPoly monomial(Int c, long e) {
        LaurentPoly p;
        if (c != 0) p.coef_[e] = std::move(c);
        return p;
    }
    static LaurentPoly variable() { return monomial(1, 1); }

    const Table& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    bool is_one() const { return coef_.size() == 1 && coef_.begin()->first == 0 && coef_.begin()->second == 1; }
    bool is_monomial() const { return coef_.size() == 1; }

    // pre: nonzero
    long min_exp() const { return coef_.begin()->first; }
    long max_exp() const { return coef_.rbegin()->first; }
    const Int& leading_coeff() const { return coef_.rbegin()->second; }

    Int coeff(long e) const {
        auto it = coef_.find(e);
        return it == coef_.end() ? Int(0) : it->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coef_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coef_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.coef_) r.coef_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // multiply by q^e
    LaurentPoly shifted(long e) const {
        LaurentPoly r;
        for (const auto& [ex, c] : coef_) r.coef_[ex + e] = c;
        return r;
    }

    // gcd of coefficients, nonnegative; content of 0 is 0
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : coef_) {
            g = int_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    LaurentPoly divided_by_int(const Int& d) const {
        LaurentPoly r;
        for (const auto& [e, c] : coef_) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            if (rem != 0) throw VerificationError("non-exact integer division of polynomial content");
            r.coef_[e] = q;
        }
        return r;
    }

    Rat eval(const Rat& q0) const {
        Rat r(0);
        for (const auto& [e, c] : coef_) r += Rat(c) * rat_pow(q0, e);
        return r;
    }

    std::string to_string(const std::string& var = "q") const {
        if (coef_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coef_) {
            Int a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? "-" : "+";
                if (a < 0) a = -a;
            }
            if (e == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str();
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
            first = false;
        }
        return out;
    }

private:
    void add_term(long e, Int c) {
        auto it = coef_.find(e);
        if (it == coef_.end()) {
            if (c != 0) coef_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    Table coef_;
};

// Exact division of ordinary polynomials (min_exp >= 0), asserting the
// remainder vanishes. Used to strip a known common factor.
inline LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    if (a.is_zero()) return {};
    LaurentPoly rem = a, quot;
    const long db = b.max_exp();
    const Int& lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long e = rem.max_exp() - db;
        Int lc = rem.leading_coeff(), q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lc.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw VerificationError("poly_div_exact: division is not exact");
        LaurentPoly t = LaurentPoly::monomial(q, e);
        quot += t;
        rem -= t * b;
    }
    if (!rem.is_zero()) throw VerificationError("poly_div_exact: nonzero remainder");
    return quot;
}

// Primitive part: content 1 and positive leading coefficient. pre: nonzero.
inline LaurentPoly poly_primitive(const LaurentPoly& a) {
    Int c = a.content();
    if (a.leading_coeff() < 0) c = -c;
    return a.divided_by_int(c);
}

// gcd of two ordinary polynomials (min_exp >= 0), returned primitive with
// positive leading coefficient; classical primitive pseudo-remainder loop.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b.is_zero() ? LaurentPoly() : poly_primitive(b);
    if (b.is_zero()) return poly_primitive(a);
    a = poly_primitive(a);
    b = poly_primitive(b);
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        LaurentPoly rem = a;
        const long db = b.max_exp();
        const Int& lb = b.leading_coeff();
        while (!rem.is_zero() && rem.max_exp() >= db) {
            long e = rem.max_exp() - db;
            Int lc = rem.leading_coeff();
            Int g = int_gcd(lc, lb);
            Int mul_rem = lb / g, mul_b = lc / g;
            if (mul_rem != 1) {
                LaurentPoly scaled;
                for (const auto& [ex, c] : rem.terms()) scaled += LaurentPoly::monomial(c * mul_rem, ex);
                rem = scaled;
            }
            rem -= LaurentPoly::monomial(mul_b, e) * b;
        }
        a = b;
        b = rem.is_zero() ? LaurentPoly() : poly_primitive(rem);
    }
    return poly_primitive(a);
}

} // namespace qgw
