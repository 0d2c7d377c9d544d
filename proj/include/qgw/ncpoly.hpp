#pragma once

#include <map>

#include "qgw/scalarq.hpp"
#include "qgw/word.hpp"

namespace qgw {

// Finite ScalarQ-linear combination of words in the free algebra. Terms are
// kept in deglex order with no zero coefficients, so representation is unique.
class NCPoly {
public:
    using Terms = std::map<Word, ScalarQ, DegLexLess>;

    NCPoly() = default;
    /*implicit*/ NCPoly(long c) { add_term(Word{}, ScalarQ(c)); }
    /*implicit*/ NCPoly(const ScalarQ& c) { add_term(Word{}, c); }

    static NCPoly one() { return NCPoly(1); }
    static NCPoly word(Word w, ScalarQ c = ScalarQ(1)) {
        NCPoly p;
        p.add_term(std::move(w), std::move(c));
        return p;
    }
    static NCPoly generator(Gen g) { return word(Word(1, static_cast<char>(g))); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long degree() const { // degree of 0 is -1
        long d = -1;
        for (const auto& [w, c] : terms_) d = std::max<long>(d, static_cast<long>(w.size()));
        return d;
    }

    // coefficient of a word (zero if absent)
    ScalarQ coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? ScalarQ(0) : it->second;
    }

    // the purely scalar part (coefficient of the empty word)
    ScalarQ scalar_part() const { return coeff(Word{}); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    void add_term(Word w, ScalarQ c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend NCPoly operator*(const ScalarQ& c, const NCPoly& p) {
        NCPoly r;
        if (c.is_zero()) return r;
        for (const auto& [w, x] : p.terms_) r.terms_.emplace(w, c * x);
        return r;
    }

    // free product: words concatenate
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    // reverse words, star the letters; coefficients are real rational functions
    NCPoly star_raw(const Alphabet& alpha) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.add_term(alpha.star_word(w), c);
        return r;
    }

    std::string to_string(const Alphabet& alpha) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) s += " + ";
            std::string cs = c.to_string();
            if (w.empty()) {
                s += cs;
            } else {
                if (cs != "1") s += "(" + cs + ")*";
                s += alpha.word_to_string(w);
            }
            first = false;
        }
        return s;
    }

private:
    Terms terms_;
};

} // namespace qgw
