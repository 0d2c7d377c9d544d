#pragma once

#include <gmpxx.h>

#include <string>

#include "qgw/errors.hpp"

namespace qgw {

// Exact unbounded integers and rationals. GMP supplies the arithmetic; these
// aliases are the only place the dependency surfaces.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Parses "p" or "p/q" with optional sign. Throws ParseError on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(Int(s), 1);
            r.canonicalize();
            return r;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError();
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
}

// q0^e for possibly negative e; q0 must be nonzero when e < 0.
inline Rat rat_pow(const Rat& q0, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num().get_mpz_t(), q0.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den().get_mpz_t(), q0.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (q0 == 0) throw DivisionByZeroError();
    return 1 / rat_pow(q0, -e);
}

} // namespace qgw
