#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgw/qaut.hpp"

using namespace qgw;

namespace {

// family 1 relations only, for set comparisons
std::vector<NCPoly> wang_family1(std::size_t n) {
    std::vector<NCPoly> out;
    auto gen = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(wang_index(n, i, j, k, l)));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) {
                            NCPoly rel;
                            for (std::size_t p = 0; p < n; ++p) rel += gen(i, j, k, p) * gen(r, s, p, l);
                            if (j == r) rel -= gen(i, s, k, l);
                            out.push_back(std::move(rel));
                        }
    return out;
}

std::vector<NCPoly> fold_all(std::size_t n, const std::vector<NCPoly>& rels) {
    std::vector<NCPoly> out;
    for (const auto& r : rels) {
        NCPoly f = fold_stars(n, r);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

} // namespace

TEST_CASE("star pairing matches the defining involution") {
    QAutPresentation pres = wang_relations(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    CHECK(pres.alphabet.star(static_cast<Gen>(wang_index(2, i, j, k, l))) ==
                          static_cast<Gen>(wang_index(2, j, i, l, k)));
}

TEST_CASE("n = 1 forces the single generator to be 1") {
    QAutPresentation pres = wang_relations(1);
    CHECK(pres.alphabet.size() == 1);
    NCPoly u_minus_one = NCPoly::generator(0) - NCPoly::one();
    bool found = false;
    for (const auto& r : pres.relations) found |= r == u_minus_one;
    CHECK(found);
}

TEST_CASE("family 1 instance and count for n = 2") {
    auto fam1 = wang_family1(2);
    CHECK(fam1.size() == 64); // 2^6 index tuples

    // (i,j,k,l,r,s) = (1,..,1): u11^11 u11^11 + u11^12 u11^21 - u11^11
    auto gen = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(wang_index(2, i, j, k, l)));
    };
    NCPoly expected = gen(0, 0, 0, 0) * gen(0, 0, 0, 0) + gen(0, 0, 0, 1) * gen(0, 0, 1, 0) - gen(0, 0, 0, 0);
    CHECK(fam1.front() == expected);
}

TEST_CASE("derived multiplicativity equals Wang family 1 for n <= 3") {
    for (std::size_t n : {1, 2, 3}) {
        DerivedRelations der = derive_from_coaction(n);
        // the derivation never produces starred symbols in family (a)
        CHECK(relation_set(fold_all(n, der.multiplicativity)) == relation_set(der.multiplicativity));
        CHECK(relation_set(der.multiplicativity) == relation_set(wang_family1(n)));
    }
}

TEST_CASE("derived star and trace relations match the defining families") {
    for (std::size_t n : {1, 2, 3}) {
        DerivedRelations der = derive_from_coaction(n);
        const std::size_t block = n * n * n * n;
        // (b): (u_ij^{lk})* = u_ji^{kl}, i.e. folding the pairing kills it
        CHECK(der.star.size() == block);
        for (const auto& r : der.star) CHECK(fold_stars(n, r).is_zero());

        // (d): sum_p u_ij^{pp} = delta_ij
        std::vector<NCPoly> expected_trace;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                NCPoly rel;
                for (std::size_t p = 0; p < n; ++p)
                    rel += NCPoly::generator(static_cast<Gen>(wang_index(n, i, j, p, p)));
                if (i == j) rel -= NCPoly::one();
                expected_trace.push_back(std::move(rel));
            }
        CHECK(relation_set(der.trace) == relation_set(expected_trace));
    }
}

TEST_CASE("all derived relations lie in the ideal of the five families") {
    for (std::size_t n : {2, 3}) {
        QAutPresentation pres = wang_relations(n);
        DerivedRelations der = derive_from_coaction(n);
        CHECK(ideal_contains(pres.alphabet, pres.relations, fold_all(n, der.all()), 2));
        // and family 1 conversely sits inside the derived set with no flanks
        CHECK(ideal_contains(pres.alphabet, fold_all(n, der.all()), wang_family1(n), 0));
    }
}

TEST_CASE("negative control: u11^11 - 1 is not in the ideal at degree 2") {
    QAutPresentation pres = wang_relations(2);
    NCPoly member = NCPoly::generator(static_cast<Gen>(wang_index(2, 0, 0, 0, 0))) - NCPoly::one();
    CHECK_FALSE(ideal_contains(pres.alphabet, pres.relations, {member}, 2));
}

TEST_CASE("whether family 2 derives from the coaction relations stays open") {
    // reported, not asserted: an open question
    std::size_t n = 2;
    QAutPresentation pres = wang_relations(n);
    DerivedRelations der = derive_from_coaction(n);
    std::vector<NCPoly> family2;
    auto gen = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return NCPoly::generator(static_cast<Gen>(wang_index(n, i, j, k, l)));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) {
                            NCPoly rel;
                            for (std::size_t p = 0; p < n; ++p) rel += gen(l, p, s, r) * gen(p, k, j, i);
                            if (j == r) rel -= gen(l, k, s, i);
                            if (!rel.is_zero()) family2.push_back(std::move(rel));
                        }
    bool contained = ideal_contains(pres.alphabet, fold_all(n, der.all()), family2, 2);
    MESSAGE("family 2 inside the ideal of coaction-derived relations at flank degree 2 (n=2): "
            << (contained ? "yes" : "no"));
}

TEST_CASE("relation sets are invariant under simultaneous index relabeling") {
    for (std::size_t n : {2, 3}) {
        QAutPresentation pres = wang_relations(n);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n; // an n-cycle
        std::vector<NCPoly> relabeled;
        for (const auto& r : pres.relations) {
            NCPoly out;
            for (const auto& [w, c] : r.terms()) {
                Word mapped;
                for (char ch : w) {
                    std::size_t idx = static_cast<Gen>(ch);
                    std::size_t l = idx % n, k = (idx / n) % n, j = (idx / (n * n)) % n,
                                i = idx / (n * n * n);
                    mapped.push_back(
                        static_cast<char>(wang_index(n, perm[i], perm[j], perm[k], perm[l])));
                }
                out.add_term(std::move(mapped), c);
            }
            relabeled.push_back(std::move(out));
        }
        CHECK(relation_set(relabeled) == relation_set(pres.relations));
    }
}
