#pragma once

#include <optional>

#include "qgw/suq2.hpp"

namespace qgw {

inline TensorPoly<2> outer_product(const NCPoly& x, const NCPoly& y) {
    TensorPoly<2> t;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) t.add_term({wx, wy}, cx * cy);
    return t;
}

// Decomposition into torus-weight-homogeneous components. The weight of a PBW
// word a^k g^m gs^n is k+m-n and of as^k g^m gs^n is -k+m-n; the components
// sum back to the input and are fixed by the projection.
inline std::map<long, NCPoly> torus_project(const Suq2& ctx, const NCPoly& p) {
    std::map<long, NCPoly> out;
    NCPoly n = ctx.normalize(p);
    for (const auto& [w, c] : n.terms()) out[Suq2::word_weight(w)].add_term(w, c);
    return out;
}

// An element tagged with its torus weight; no value means the element mixes
// several weights. Weight k certifies (id (x) pi) Delta(x) = x (x) z^k.
struct WeightedElement {
    NCPoly element;
    std::optional<long> weight; // nullopt = mixed

    bool is_mixed() const { return !weight.has_value(); }

    static WeightedElement classify(const Suq2& ctx, const NCPoly& p) {
        auto parts = torus_project(ctx, p);
        WeightedElement out;
        out.element = ctx.normalize(p);
        if (parts.empty())
            out.weight = 0; // zero sits in every bundle; tag it with weight 0
        else if (parts.size() == 1)
            out.weight = parts.begin()->first;
        return out;
    }
};

// x lies in the line bundle Gamma(E_k) of weight-k elements; Gamma(E_0) is
// the Podles sphere coordinate algebra.
inline bool in_line_bundle(const Suq2& ctx, const NCPoly& p, long k) {
    for (const auto& [w, comp] : torus_project(ctx, p))
        if (w != k && !comp.is_zero()) return false;
    return true;
}

// PBW basis words of the given weight, up to the degree bound
inline std::vector<Word> weight_words(long weight, long degree_bound) {
    std::vector<Word> out;
    for (const auto& w : suq2_pbw_words(degree_bound))
        if (Suq2::word_weight(w) == weight) out.push_back(w);
    return out;
}

// Gamma(E_m) . Gamma(E_n) lies in Gamma(E_{m+n}): exhaustive check on
// weight-homogeneous PBW words up to the degree bound.
inline bool bundle_product_check(const Suq2& ctx, long m, long n, long degree_bound) {
    auto lhs = weight_words(m, degree_bound), rhs = weight_words(n, degree_bound);
    for (const auto& x : lhs)
        for (const auto& y : rhs)
            if (!in_line_bundle(ctx, ctx.mul(NCPoly::word(x), NCPoly::word(y)), m + n)) return false;
    return true;
}

// Generator pairs (cofactor, generator) with sum cofactor*generator = 1, so
// that x = sum (x . cofactor) . generator is a resolution of the identity.
inline std::vector<std::pair<NCPoly, NCPoly>> bundle_generator_pairs(long k) {
    using namespace suq2_gen;
    if (k == 0) return {{NCPoly::one(), NCPoly::one()}};
    if (k == 1)
        return {{NCPoly::generator(as), NCPoly::generator(a)},
                {NCPoly::generator(gs), NCPoly::generator(g)}};
    if (k == -1)
        return {{NCPoly::generator(a), NCPoly::generator(as)},
                {ScalarQ::q_power(2) * NCPoly::generator(g), NCPoly::generator(gs)}};
    throw DomainError("bundle generators are tabulated for k in {-1, 0, 1}");
}

// Every weight-k PBW word of degree <= bound decomposes as sum of
// Gamma(E_0)-multiples of the generators.
inline bool bundle_generators_check(const Suq2& ctx, long k, long degree_bound,
                                    const std::vector<std::pair<NCPoly, NCPoly>>& pairs) {
    for (const auto& w : weight_words(k, degree_bound)) {
        NCPoly x = NCPoly::word(w), recombined;
        for (const auto& [cofactor, generator] : pairs) {
            NCPoly coeff = ctx.mul(x, cofactor);
            if (!in_line_bundle(ctx, coeff, 0)) return false;
            recombined += ctx.mul(coeff, generator);
        }
        if (ctx.normalize(recombined) != x) return false;
    }
    return true;
}

inline bool bundle_generators_check(const Suq2& ctx, long k, long degree_bound) {
    return bundle_generators_check(ctx, k, degree_bound, bundle_generator_pairs(k));
}

// Self-adjoint idempotent p = v v* over the Podles sphere: v = (a, g) for
// k = -1 and the q-twisted starred column v = (a*, -q g*) for k = +1, so that
// v* v = 1 by the two unitarity relations.
inline std::vector<std::vector<NCPoly>> projective_idempotent(const Suq2& ctx, long k) {
    using namespace suq2_gen;
    std::vector<NCPoly> v;
    if (k == -1) {
        v = {NCPoly::generator(a), NCPoly::generator(g)};
    } else if (k == 1) {
        v = {NCPoly::generator(as), -(ScalarQ::q() * NCPoly::generator(gs))};
    } else {
        throw DomainError("projective idempotent is defined for k in {-1, +1}");
    }
    std::vector<std::vector<NCPoly>> p(2, std::vector<NCPoly>(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p[i][j] = ctx.mul(v[i], ctx.star(v[j]));
    return p;
}

// h . x = h_(1) x S(h_(2))
inline NCPoly adjoint_action(const Suq2& ctx, const NCPoly& h, const NCPoly& x) {
    NCPoly r;
    TensorPoly<2> dh = ctx.comultiply(h);
    for (const auto& [k, c] : dh.terms())
        r += c * ctx.mul(ctx.mul(NCPoly::word(k[0]), x), ctx.antipode(NCPoly::word(k[1])));
    return r;
}

// Yetter-Drinfeld compatibility of the adjoint action with the coaction
// Delta restricted to the weight-0 subalgebra:
//   Delta(f . m) = f_(1) m_(1) S(f_(3)) (x) f_(2) . m_(2)
// checked for every generator f and every weight-0 PBW word m of degree <= bound.
inline bool yd_compatibility_check(const Suq2& ctx, long degree_bound) {
    std::vector<NCPoly> generators;
    for (Gen x = 0; x < 4; ++x) generators.push_back(NCPoly::generator(x));
    auto coinvariants = weight_words(0, degree_bound);
    for (const auto& f : generators) {
        TensorPoly<3> d2f = ctx.comultiply_leg<2>(ctx.comultiply(f), 0);
        for (const auto& mw : coinvariants) {
            NCPoly m = NCPoly::word(mw);
            TensorPoly<2> dm = ctx.comultiply(m);
            TensorPoly<2> lhs = ctx.comultiply(adjoint_action(ctx, f, m));
            TensorPoly<2> rhs;
            for (const auto& [fk, fc] : d2f.terms()) {
                for (const auto& [mk, mc] : dm.terms()) {
                    NCPoly left = ctx.mul(ctx.mul(NCPoly::word(fk[0]), NCPoly::word(mk[0])),
                                          ctx.antipode(NCPoly::word(fk[2])));
                    NCPoly right = adjoint_action(ctx, NCPoly::word(fk[1]), NCPoly::word(mk[1]));
                    rhs += (fc * mc) * outer_product(left, right);
                }
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// Multiplicity of each spin-l isotypic component inside Gamma(E_k), read off
// from the torus weights of the corepresentation columns; always 0 or 1.
struct IsotypicProfile {
    long bundle = 0;
    HalfInt max_spin;
    std::map<int, int> mult; // twice-spin -> multiplicity

    // tail beyond max_spin: 1 iff l >= |k|/2 and 2l = k (mod 2)
    static int closed_form(long bundle, HalfInt l) {
        long t = l.twice;
        return (t >= std::abs(bundle) && (t - bundle) % 2 == 0) ? 1 : 0;
    }
    bool matches_closed_form() const {
        for (const auto& [t, m] : mult)
            if (m != closed_form(bundle, HalfInt::from_twice(t))) return false;
        return true;
    }
    std::string tail_description() const {
        return "multiplicity 1 for 2l >= |" + std::to_string(bundle) + "| with 2l = " +
               std::to_string(bundle) + " (mod 2), else 0";
    }
    // profiles compare as mappings spin -> multiplicity
    friend bool operator==(const IsotypicProfile& a, const IsotypicProfile& b) {
        return a.mult == b.mult;
    }
};

inline IsotypicProfile isotypic_profile(const Suq2& ctx, long k, HalfInt max_spin) {
    IsotypicProfile prof;
    prof.bundle = k;
    prof.max_spin = max_spin;
    for (int t = 0; t <= max_spin.twice; ++t) {
        const CorepMatrix& c = ctx.build_corep(HalfInt::from_twice(t));
        int count = 0;
        for (long w : c.col_weight)
            if (w == k) ++count;
        if (count > 1) throw VerificationError("isotypic multiplicity exceeds 1");
        prof.mult[t] = count;
    }
    return prof;
}

inline IsotypicProfile isotypic_profile(const Suq2& ctx, long k) {
    return isotypic_profile(ctx, k, ctx.spin_bound());
}

} // namespace qgw
