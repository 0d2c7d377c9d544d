#pragma once

#include <optional>
#include <vector>

#include "qgw/ncpoly.hpp"

namespace qgw {

// A well-founded, concatenation-compatible word order: total degree, then a
// weighted letter sum, then lexicographic comparison of precedence ranks.
// With zero weights and identity ranks this is plain deglex.
struct WordOrder {
    std::vector<long> weight; // per generator; empty means all zero
    std::vector<int> rank;    // per generator; empty means rank = index

    long weight_of(const Word& w) const {
        if (weight.empty()) return 0;
        long s = 0;
        for (char ch : w) s += weight[static_cast<Gen>(ch)];
        return s;
    }
    int rank_of(Gen g) const { return rank.empty() ? static_cast<int>(g) : rank[g]; }

    bool less(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        long wa = weight_of(a), wb = weight_of(b);
        if (wa != wb) return wa < wb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int ra = rank_of(static_cast<Gen>(a[i])), rb = rank_of(static_cast<Gen>(b[i]));
            if (ra != rb) return ra < rb;
        }
        return false;
    }
};

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

enum class Strategy { Leftmost, Rightmost };

struct CriticalPair {
    Word overlap;
    std::size_t rule_a = 0, rule_b = 0;
    NCPoly normal_a, normal_b; // the two non-matching normal forms
};

struct ConfluenceReport {
    std::vector<CriticalPair> unresolved;
    std::size_t pairs_examined = 0;
    bool confluent() const { return unresolved.empty(); }
};

// An oriented, terminating rewriting system over a star-alphabet. Every rule
// must strictly decrease the word order (lhs greater than each rhs word),
// which the constructor checks; normalize therefore terminates for any
// strategy, and results are strategy-independent once check_confluence
// reports no unresolved pairs.
class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, WordOrder order, std::vector<RewriteRule> rules)
        : alphabet_(std::move(alphabet)), order_(std::move(order)), rules_(std::move(rules)) {
        for (const auto& r : rules_) {
            if (r.lhs.size() < 2) throw DomainError("rewrite rule left-hand side must have length >= 2");
            for (const auto& [w, c] : r.rhs.terms())
                if (!order_.less(w, r.lhs))
                    throw DomainError("rewrite rule does not decrease the term order: " +
                                      alphabet_.word_to_string(r.lhs) + " -> " + alphabet_.word_to_string(w));
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const WordOrder& order() const { return order_; }

    // position and rule index of the redex chosen by the strategy
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w, Strategy st) const {
        if (st == Strategy::Leftmost) {
            for (std::size_t pos = 0; pos < w.size(); ++pos)
                if (auto r = match_at(w, pos)) return std::make_pair(pos, *r);
        } else {
            for (std::size_t pos = w.size(); pos-- > 0;)
                if (auto r = match_at(w, pos)) return std::make_pair(pos, *r);
        }
        return std::nullopt;
    }

    bool is_normal_word(const Word& w) const { return !find_redex(w, Strategy::Leftmost).has_value(); }

    NCPoly normalize_word(const Word& w, Strategy st = Strategy::Leftmost) const {
        NCPoly result;
        std::vector<std::pair<ScalarQ, Word>> work;
        work.emplace_back(ScalarQ(1), w);
        while (!work.empty()) {
            auto [c, cur] = std::move(work.back());
            work.pop_back();
            auto redex = find_redex(cur, st);
            if (!redex) {
                result.add_term(std::move(cur), std::move(c));
                continue;
            }
            auto [pos, ri] = *redex;
            const RewriteRule& rule = rules_[ri];
            Word prefix = cur.substr(0, pos);
            Word suffix = cur.substr(pos + rule.lhs.size());
            for (const auto& [rw, rc] : rule.rhs.terms())
                work.emplace_back(c * rc, prefix + rw + suffix);
        }
        return result;
    }

    NCPoly normalize(const NCPoly& p, Strategy st = Strategy::Leftmost) const {
        NCPoly result;
        for (const auto& [w, c] : p.terms()) {
            if (is_normal_word(w)) {
                result.add_term(w, c);
            } else {
                result += c * normalize_word(w, st);
            }
        }
        return result;
    }

    // Diamond-lemma local confluence check: every overlap and inclusion
    // ambiguity between rule left-hand sides is resolved in both directions
    // and the two normal forms compared. overlap_cap bounds the length of the
    // ambiguity word; 0 means twice the longest left-hand side, which covers
    // every ambiguity that can occur.
    ConfluenceReport check_confluence(std::size_t overlap_cap = 0) const {
        if (overlap_cap == 0) {
            std::size_t m = 0;
            for (const auto& r : rules_) m = std::max(m, r.lhs.size());
            overlap_cap = 2 * m;
        }
        ConfluenceReport report;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = 0; j < rules_.size(); ++j) {
                const Word& li = rules_[i].lhs;
                const Word& lj = rules_[j].lhs;
                // proper overlap: a suffix of li equals a prefix of lj
                for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
                    if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
                    Word w = li + lj.substr(k);
                    if (w.size() > overlap_cap) continue;
                    NCPoly branch_a = rules_[i].rhs * NCPoly::word(lj.substr(k));
                    NCPoly branch_b = NCPoly::word(li.substr(0, li.size() - k)) * rules_[j].rhs;
                    record(report, w, i, j, branch_a, branch_b);
                }
                // two rules with the same left-hand side must agree
                if (i < j && li == lj) record(report, li, i, j, rules_[i].rhs, rules_[j].rhs);
                // inclusion: lj occurs inside li
                if (lj.size() < li.size()) {
                    for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                        if (li.compare(pos, lj.size(), lj) != 0) continue;
                        if (li.size() > overlap_cap) continue;
                        NCPoly branch_b = NCPoly::word(li.substr(0, pos)) * rules_[j].rhs *
                                          NCPoly::word(li.substr(pos + lj.size()));
                        record(report, li, i, j, rules_[i].rhs, branch_b);
                    }
                }
            }
        }
        return report;
    }

private:
    std::optional<std::size_t> match_at(const Word& w, std::size_t pos) const {
        for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
            const Word& l = rules_[ri].lhs;
            if (pos + l.size() <= w.size() && w.compare(pos, l.size(), l) == 0) return ri;
        }
        return std::nullopt;
    }

    void record(ConfluenceReport& report, const Word& w, std::size_t i, std::size_t j,
                const NCPoly& branch_a, const NCPoly& branch_b) const {
        ++report.pairs_examined;
        NCPoly na = normalize(branch_a);
        NCPoly nb = normalize(branch_b);
        if (na != nb) report.unresolved.push_back({w, i, j, std::move(na), std::move(nb)});
    }

    Alphabet alphabet_;
    WordOrder order_;
    std::vector<RewriteRule> rules_;
};

// ----- the SU_q(2) coordinate algebra presentation --------------------------

// generator ids in the SU_q(2) alphabet {a* , a , g , g*}
namespace suq2_gen {
inline constexpr Gen as = 0; // alpha*
inline constexpr Gen a = 1;  // alpha
inline constexpr Gen g = 2;  // gamma
inline constexpr Gen gs = 3; // gamma*
} // namespace suq2_gen

inline Alphabet suq2_alphabet() {
    return Alphabet({"as", "a", "g", "gs"}, {suq2_gen::a, suq2_gen::as, suq2_gen::gs, suq2_gen::g});
}

// The defining relations oriented so that normal forms are the PBW monomials
//   a^k g^m gs^n  and  as^k g^m gs^n (k >= 1).
// The order refines deglex by the number of alpha-type letters, which makes
// a as -> 1 - q^2 g gs decrease as well.
inline RewriteSystem suq2_presentation() {
    using namespace suq2_gen;
    const ScalarQ q = ScalarQ::q();
    const ScalarQ qinv = ScalarQ::q_power(-1);
    const ScalarQ q2 = ScalarQ::q_power(2);
    NCPoly ggs = NCPoly::word(word_of({g, gs}));

    std::vector<RewriteRule> rules = {
        {word_of({g, a}), qinv * NCPoly::word(word_of({a, g}))},
        {word_of({gs, a}), qinv * NCPoly::word(word_of({a, gs}))},
        {word_of({g, as}), q * NCPoly::word(word_of({as, g}))},
        {word_of({gs, as}), q * NCPoly::word(word_of({as, gs}))},
        {word_of({gs, g}), NCPoly::word(word_of({g, gs}))},
        {word_of({as, a}), NCPoly::one() - ggs},
        {word_of({a, as}), NCPoly::one() - q2 * ggs},
    };
    WordOrder order{{1, 1, 0, 0}, {}};
    return RewriteSystem(suq2_alphabet(), std::move(order), std::move(rules));
}

// PBW basis words of total degree <= max_degree, in deglex order.
inline std::vector<Word> suq2_pbw_words(long max_degree) {
    using namespace suq2_gen;
    std::vector<Word> out;
    for (long d = 0; d <= max_degree; ++d) {
        for (long k = 0; k <= d; ++k)
            for (long m = 0; m + k <= d; ++m) {
                long n = d - k - m;
                Word w;
                w.append(static_cast<std::size_t>(k), static_cast<char>(a));
                w.append(static_cast<std::size_t>(m), static_cast<char>(g));
                w.append(static_cast<std::size_t>(n), static_cast<char>(gs));
                out.push_back(std::move(w));
                if (k >= 1) {
                    Word v;
                    v.append(static_cast<std::size_t>(k), static_cast<char>(as));
                    v.append(static_cast<std::size_t>(m), static_cast<char>(g));
                    v.append(static_cast<std::size_t>(n), static_cast<char>(gs));
                    out.push_back(std::move(v));
                }
            }
    }
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

} // namespace qgw
