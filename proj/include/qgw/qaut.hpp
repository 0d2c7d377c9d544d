#pragma once

#include <set>

#include "qgw/ncpoly.hpp"

namespace qgw {

// Generators u_{ij}^{kl} of Wang's quantum automorphism algebra of M_n,
// ordered by the 1-based index tuple (i,j,k,l).
inline std::size_t wang_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l; // 0-based indices
}

inline std::string wang_name(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return "u" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k + 1) +
           std::to_string(l + 1);
}

struct QAutPresentation {
    std::size_t n = 0;
    Alphabet alphabet;             // star pairing (u_{ij}^{kl})* = u_{ji}^{lk}
    std::vector<NCPoly> relations; // Wang's families; the star family is the pairing itself
};

// canonical serialization, for set-of-relations comparisons
inline std::string poly_key(const NCPoly& p) {
    std::string s;
    for (const auto& [w, c] : p.terms()) {
        s += c.to_string();
        s += '[';
        for (char ch : w) s += std::to_string(static_cast<int>(static_cast<Gen>(ch))) + ",";
        s += ']';
    }
    return s;
}

inline std::set<std::string> relation_set(const std::vector<NCPoly>& rels) {
    std::set<std::string> keys;
    for (const auto& r : rels)
        if (!r.is_zero()) keys.insert(poly_key(r));
    return keys;
}

// The five families of defining relations; the starred family is carried by
// the alphabet's involution rather than as polynomials.
inline QAutPresentation wang_relations(std::size_t n) {
    if (n < 1) throw DomainError("wang_relations requires n >= 1");
    QAutPresentation pres;
    pres.n = n;
    std::vector<std::string> names(n * n * n * n);
    std::vector<Gen> star(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    names[wang_index(n, i, j, k, l)] = wang_name(i, j, k, l);
                    star[wang_index(n, i, j, k, l)] = static_cast<Gen>(wang_index(n, j, i, l, k));
                }
    pres.alphabet = Alphabet(std::move(names), std::move(star));

    auto gen = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(wang_index(n, i, j, k, l)));
    };
    std::set<std::string> seen;
    auto push = [&](NCPoly rel) {
        if (rel.is_zero()) return;
        if (seen.insert(poly_key(rel)).second) pres.relations.push_back(std::move(rel));
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) {
                            // sum_p u_{ij}^{kp} u_{rs}^{pl} = delta_{jr} u_{is}^{kl}
                            NCPoly rel1;
                            for (std::size_t p = 0; p < n; ++p) rel1 += gen(i, j, k, p) * gen(r, s, p, l);
                            if (j == r) rel1 -= gen(i, s, k, l);
                            push(std::move(rel1));
                            // sum_p u_{lp}^{sr} u_{pk}^{ji} = delta_{jr} u_{lk}^{si}
                            NCPoly rel2;
                            for (std::size_t p = 0; p < n; ++p) rel2 += gen(l, p, s, r) * gen(p, k, j, i);
                            if (j == r) rel2 -= gen(l, k, s, i);
                            push(std::move(rel2));
                        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            // sum_p u_{kl}^{pp} = delta_{kl}
            NCPoly rel4;
            for (std::size_t p = 0; p < n; ++p) rel4 += gen(k, l, p, p);
            if (k == l) rel4 -= NCPoly::one();
            push(std::move(rel4));
            // sum_p u_{pp}^{kl} = delta_{kl}
            NCPoly rel5;
            for (std::size_t p = 0; p < n; ++p) rel5 += gen(p, p, k, l);
            if (k == l) rel5 -= NCPoly::one();
            push(std::move(rel5));
        }
    return pres;
}

// Symbolic derivation of relations from the coaction axioms. Stars stay free
// symbols here (generator 2nd block), so the star condition genuinely derives
// the pairing instead of holding by construction.
struct DerivedRelations {
    std::size_t n = 0;
    Alphabet alphabet; // n^4 generators u plus their formal stars
    std::vector<NCPoly> multiplicativity; // lambda(e_ij) lambda(e_rs) = lambda(e_ij e_rs)
    std::vector<NCPoly> star;             // lambda(e_ij)* = lambda(e_ji)
    std::vector<NCPoly> unitality;        // sum_i lambda(e_ii) = 1 (x) 1
    std::vector<NCPoly> trace;            // (id (x) tau) lambda = tau(.) 1

    std::vector<NCPoly> all() const {
        std::vector<NCPoly> out = multiplicativity;
        out.insert(out.end(), star.begin(), star.end());
        out.insert(out.end(), unitality.begin(), unitality.end());
        out.insert(out.end(), trace.begin(), trace.end());
        return out;
    }
};

inline DerivedRelations derive_from_coaction(std::size_t n) {
    if (n < 1) throw DomainError("derive_from_coaction requires n >= 1");
    DerivedRelations der;
    der.n = n;
    const std::size_t block = n * n * n * n;
    std::vector<std::string> names(2 * block);
    std::vector<Gen> star(2 * block);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    std::size_t idx = wang_index(n, i, j, k, l);
                    names[idx] = wang_name(i, j, k, l);
                    names[block + idx] = wang_name(i, j, k, l) + "*";
                    star[idx] = static_cast<Gen>(block + idx);
                    star[block + idx] = static_cast<Gen>(idx);
                }
    der.alphabet = Alphabet(std::move(names), std::move(star));

    auto gen = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(wang_index(n, i, j, k, l)));
    };
    auto gen_star = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(block + wang_index(n, i, j, k, l)));
    };
    // deduplicate within each family; coincidences across families are kept
    std::map<const std::vector<NCPoly>*, std::set<std::string>> seen;
    auto push = [&](std::vector<NCPoly>& family, NCPoly rel) {
        if (rel.is_zero()) return;
        if (seen[&family].insert(poly_key(rel)).second) family.push_back(std::move(rel));
    };

    // (a) coefficient of e_kl in lambda(e_ij) lambda(e_rs) - lambda(e_ij e_rs)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l) {
                            NCPoly rel;
                            for (std::size_t p = 0; p < n; ++p) rel += gen(i, j, k, p) * gen(r, s, p, l);
                            if (j == r) rel -= gen(i, s, k, l);
                            push(der.multiplicativity, std::move(rel));
                        }
    // (b) lambda(e_ij)* - lambda(e_ji); matrix units star to e_lk
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    push(der.star, gen_star(i, j, l, k) - gen(j, i, k, l));
    // (c) coefficient of e_kl in sum_i lambda(e_ii) - 1 (x) 1
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            NCPoly rel;
            for (std::size_t i = 0; i < n; ++i) rel += gen(i, i, k, l);
            if (k == l) rel -= NCPoly::one();
            push(der.unitality, std::move(rel));
        }
    // (d) (id (x) tau) lambda(e_ij) - tau(e_ij) 1, with the unnormalized trace
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            NCPoly rel;
            for (std::size_t p = 0; p < n; ++p) rel += gen(i, j, p, p);
            if (i == j) rel -= NCPoly::one();
            push(der.trace, std::move(rel));
        }
    return der;
}

// rewrite a free-star polynomial over the paired alphabet via (u_{ij}^{kl})* = u_{ji}^{lk}
inline NCPoly fold_stars(std::size_t n, const NCPoly& p) {
    const std::size_t block = n * n * n * n;
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word mapped;
        mapped.reserve(w.size());
        for (char ch : w) {
            std::size_t idx = static_cast<Gen>(ch);
            if (idx >= block) {
                idx -= block;
                std::size_t l = idx % n, k = (idx / n) % n, j = (idx / (n * n)) % n, i = idx / (n * n * n);
                idx = wang_index(n, j, i, l, k);
            }
            mapped.push_back(static_cast<char>(idx));
        }
        out.add_term(std::move(mapped), c);
    }
    return out;
}

// Sparse Gaussian elimination on noncommutative polynomials, keyed by the
// deglex-leading word.
class SpanReducer {
public:
    NCPoly reduce(NCPoly p) const {
        while (!p.is_zero()) {
            const auto& lead = *p.terms().rbegin();
            auto it = pivots_.find(lead.first);
            if (it == pivots_.end()) break;
            p -= lead.second * it->second;
        }
        return p;
    }

    bool add(NCPoly p) {
        p = reduce(std::move(p));
        if (p.is_zero()) return false;
        const auto& lead = *p.terms().rbegin();
        Word lw = lead.first;
        NCPoly monic = (ScalarQ(1) / lead.second) * p;
        pivots_.emplace(std::move(lw), std::move(monic));
        return true;
    }

    bool contains(const NCPoly& p) const { return reduce(p).is_zero(); }

private:
    std::map<Word, NCPoly, DegLexLess> pivots_;
};

// True iff every member lies in the linear span of { m1 . r . m2 } with r a
// generator relation and flanking words of total degree <= degree_bound.
// Levels are added in increasing flank degree with an early exit, so the
// typical positive case never enumerates flanks at all.
inline bool ideal_contains(const Alphabet& alphabet, const std::vector<NCPoly>& generators,
                           const std::vector<NCPoly>& members, long degree_bound) {
    SpanReducer span;
    auto all_in = [&]() {
        for (const auto& m : members)
            if (!span.contains(m)) return false;
        return true;
    };
    const std::size_t nsym = alphabet.size();
    std::vector<Word> level{Word{}}; // words of the current flank degree
    std::vector<std::vector<Word>> words_by_degree{level};
    for (long fd = 0; fd <= degree_bound; ++fd) {
        if (fd > 0) {
            std::vector<Word> next;
            next.reserve(words_by_degree.back().size() * nsym);
            for (const auto& w : words_by_degree.back())
                for (std::size_t g = 0; g < nsym; ++g) next.push_back(w + static_cast<char>(g));
            words_by_degree.push_back(std::move(next));
        }
        for (long left = 0; left <= fd; ++left) {
            for (const auto& m1 : words_by_degree[left])
                for (const auto& m2 : words_by_degree[fd - left])
                    for (const auto& r : generators)
                        span.add(NCPoly::word(m1) * r * NCPoly::word(m2));
        }
        if (all_in()) return true;
    }
    return false;
}

} // namespace qgw
