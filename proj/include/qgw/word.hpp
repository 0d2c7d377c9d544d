#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qgw/errors.hpp"

namespace qgw {

// A generator is an index into an Alphabet; a word is a sequence of them.
// std::string keeps short words allocation-free and hashes/compares cheaply.
using Gen = unsigned char;
using Word = std::string;

inline Word word_of(std::initializer_list<Gen> gens) {
    Word w;
    for (Gen g : gens) w.push_back(static_cast<char>(g));
    return w;
}

// degree, then lexicographic on generator indices
inline bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

// Named generators with a star involution on the names.
class Alphabet {
public:
    Alphabet() = default;
    // pairs[i] is the id of the star-partner of generator i
    Alphabet(std::vector<std::string> names, std::vector<Gen> star)
        : names_(std::move(names)), star_(std::move(star)) {
        if (names_.size() != star_.size() || names_.size() > 255)
            throw DomainError("alphabet: bad star pairing size");
        for (std::size_t i = 0; i < star_.size(); ++i) {
            if (star_[i] >= names_.size() || star_[star_[i]] != i)
                throw DomainError("alphabet: star pairing is not an involution");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw DomainError("alphabet: duplicate generator name");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(Gen g) const { return names_.at(g); }
    Gen star(Gen g) const { return star_.at(g); }

    bool has(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }
    Gen id(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) throw DomainError("unknown generator '" + name + "'");
        return static_cast<Gen>(it - names_.begin());
    }

    // word reversal combined with the letterwise involution
    Word star_word(const Word& w) const {
        Word r;
        r.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            r.push_back(static_cast<char>(star_[static_cast<Gen>(*it)]));
        return r;
    }

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += " ";
            s += name(static_cast<Gen>(w[i]));
        }
        return s;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ && a.star_ == b.star_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Gen> star_;
};

} // namespace qgw
