#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qgw/halfint.hpp"
#include "qgw/linalg.hpp"
#include "qgw/rewrite.hpp"

namespace qgw {

template <std::size_t N>
struct LegsLess {
    bool operator()(const std::array<Word, N>& x, const std::array<Word, N>& y) const {
        for (std::size_t i = 0; i < N; ++i)
            if (x[i] != y[i]) return deglex_less(x[i], y[i]);
        return false;
    }
};

// Element of the N-fold tensor power of the polynomial algebra, every leg a
// single normal-form word; unique representation under the leg-wise order.
template <std::size_t N>
class TensorPoly {
public:
    using Key = std::array<Word, N>;
    using Terms = std::map<Key, ScalarQ, LegsLess<N>>;

    TensorPoly() = default;

    static TensorPoly unit() {
        TensorPoly t;
        t.add_term(Key{}, ScalarQ(1));
        return t;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Key k, ScalarQ c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const ScalarQ& c, const TensorPoly& t) {
        TensorPoly r;
        if (c.is_zero()) return r;
        for (const auto& [k, x] : t.terms_) r.terms_.emplace(k, c * x);
        return r;
    }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    std::string to_string(const Alphabet& alpha) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*";
            for (std::size_t i = 0; i < N; ++i) {
                if (i) s += "(x)";
                s += "[" + alpha.word_to_string(k[i]) + "]";
            }
        }
        return s;
    }

private:
    Terms terms_;
};

inline NCPoly to_poly(const TensorPoly<1>& t) {
    NCPoly p;
    for (const auto& [k, c] : t.terms()) p.add_term(k[0], c);
    return p;
}

// Matrix corepresentation of spin l: entries in PBW normal form, column j
// carrying torus weight 2(l - j) so that pi applied entrywise gives
// diag(z^w0, ..., z^w_{2l}).
struct CorepMatrix {
    HalfInt spin;
    std::vector<std::vector<NCPoly>> entry;
    std::vector<long> col_weight;
    std::size_t dim() const { return entry.size(); }
};

// The Hopf-*-algebra C[SU_q(2)]: rewriting plus comultiplication, counit,
// antipode, Haar state, corepresentation theory. All operations are pure;
// the memo caches are internally synchronized.
class Suq2 {
public:
    explicit Suq2(HalfInt spin_bound = HalfInt(3))
        : system_(suq2_presentation()), spin_bound_(spin_bound) {
        using namespace suq2_gen;
        const ScalarQ q = ScalarQ::q();
        auto t2 = [](Gen x, Gen y, ScalarQ c) {
            TensorPoly<2> t;
            t.add_term({Word(1, static_cast<char>(x)), Word(1, static_cast<char>(y))}, std::move(c));
            return t;
        };
        delta_gen_[as] = t2(as, as, 1) - t2(g, gs, q);
        delta_gen_[a] = t2(a, a, 1) - t2(gs, g, q);
        delta_gen_[g] = t2(g, a, 1) + t2(as, g, 1);
        delta_gen_[gs] = t2(gs, as, 1) + t2(a, gs, 1);
        antipode_gen_map_ = {a, as, g, gs}; // letter image under S, up to scalar
        antipode_gen_scalar_[as] = ScalarQ(1);
        antipode_gen_scalar_[a] = ScalarQ(1);
        antipode_gen_scalar_[g] = -q;
        antipode_gen_scalar_[gs] = -ScalarQ::q_power(-1);
    }

    const RewriteSystem& system() const { return system_; }
    const Alphabet& alphabet() const { return system_.alphabet(); }
    HalfInt spin_bound() const { return spin_bound_; }

    // cached normal form of a single word
    const NCPoly& nf_word(const Word& w) const {
        {
            std::lock_guard lock(mutex_);
            auto it = nf_cache_.find(w);
            if (it != nf_cache_.end()) return it->second;
        }
        NCPoly nf = system_.normalize_word(w);
        std::lock_guard lock(mutex_);
        return nf_cache_.try_emplace(w, std::move(nf)).first->second;
    }

    NCPoly normalize(const NCPoly& p) const {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) {
            if (system_.is_normal_word(w))
                r.add_term(w, c);
            else
                r += c * nf_word(w);
        }
        return r;
    }

    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return normalize(a * b); }

    NCPoly star(const NCPoly& p) const { return normalize(p.star_raw(alphabet())); }

    // ---- coalgebra structure ------------------------------------------------

    const TensorPoly<2>& delta_word(const Word& w) const {
        {
            std::lock_guard lock(mutex_);
            auto it = delta_cache_.find(w);
            if (it != delta_cache_.end()) return it->second;
        }
        TensorPoly<2> d = TensorPoly<2>::unit();
        for (char ch : w) d = tensor_mul(d, delta_gen_[static_cast<Gen>(ch)]);
        std::lock_guard lock(mutex_);
        return delta_cache_.try_emplace(w, std::move(d)).first->second;
    }

    TensorPoly<2> comultiply(const NCPoly& p) const {
        TensorPoly<2> r;
        for (const auto& [w, c] : p.terms()) r += c * delta_word(w);
        return r;
    }

    // multiplicative extension of eps(alpha) = 1, eps(gamma) = 0
    ScalarQ counit(const NCPoly& p) const {
        using namespace suq2_gen;
        ScalarQ r(0);
        for (const auto& [w, c] : p.terms()) {
            bool alpha_only = true;
            for (char ch : w)
                if (static_cast<Gen>(ch) == g || static_cast<Gen>(ch) == gs) { alpha_only = false; break; }
            if (alpha_only) r += c;
        }
        return r;
    }

    // anti-multiplicative extension of S(alpha) = alpha*, S(gamma) = -q gamma
    NCPoly antipode(const NCPoly& p) const {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) {
            ScalarQ factor = c;
            Word mapped;
            mapped.reserve(w.size());
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                Gen x = static_cast<Gen>(*it);
                factor *= antipode_gen_scalar_[x];
                mapped.push_back(static_cast<char>(antipode_gen_map_[x]));
            }
            r += factor * nf_word(mapped);
        }
        return r;
    }

    // The Haar state on the PBW basis: phi(g^m gs^m) = (1-q^2)/(1-q^{2m+2}),
    // zero on every other basis word. The closed values are re-derived from
    // the invariance equations by the test-suite oracle.
    ScalarQ haar(const NCPoly& p) const {
        using namespace suq2_gen;
        NCPoly n = normalize(p);
        ScalarQ r(0);
        for (const auto& [w, c] : n.terms()) {
            long ng = 0, ngs = 0;
            bool gamma_only = true;
            for (char ch : w) {
                Gen x = static_cast<Gen>(ch);
                if (x == g) ++ng;
                else if (x == gs) ++ngs;
                else { gamma_only = false; break; }
            }
            if (gamma_only && ng == ngs) r += c * haar_moment(ng);
            // words with alpha letters or unbalanced gamma powers vanish
        }
        return r;
    }

    ScalarQ peter_weyl_pairing(const NCPoly& x, const NCPoly& y) const { return haar(mul(star(x), y)); }

    // ---- torus quotient ------------------------------------------------------

    // right-torus weight of a word: +1 for a and g, -1 for a* and g*
    static long word_weight(const Word& w) {
        using namespace suq2_gen;
        long s = 0;
        for (char ch : w) {
            Gen x = static_cast<Gen>(ch);
            s += (x == a || x == g) ? 1 : -1;
        }
        return s;
    }

    // the *-homomorphism pi: alpha -> z, gamma -> 0, as a Laurent table in z
    std::map<long, ScalarQ> pi(const NCPoly& p) const {
        using namespace suq2_gen;
        std::map<long, ScalarQ> out;
        for (const auto& [w, c] : p.terms()) {
            long e = 0;
            bool survives = true;
            for (char ch : w) {
                Gen x = static_cast<Gen>(ch);
                if (x == g || x == gs) { survives = false; break; }
                e += (x == a) ? 1 : -1;
            }
            if (!survives) continue;
            auto [it, inserted] = out.try_emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

    // ---- tensor-leg machinery ------------------------------------------------

    template <std::size_t N>
    TensorPoly<N> tensor_mul(const TensorPoly<N>& x, const TensorPoly<N>& y) const {
        TensorPoly<N> r;
        for (const auto& [kx, cx] : x.terms())
            for (const auto& [ky, cy] : y.terms()) {
                std::vector<std::pair<typename TensorPoly<N>::Key, ScalarQ>> partial;
                partial.emplace_back(typename TensorPoly<N>::Key{}, cx * cy);
                for (std::size_t leg = 0; leg < N; ++leg) {
                    const NCPoly& f = nf_word(kx[leg] + ky[leg]);
                    std::vector<std::pair<typename TensorPoly<N>::Key, ScalarQ>> next;
                    for (const auto& [key, c] : partial)
                        for (const auto& [w, cw] : f.terms()) {
                            auto k2 = key;
                            k2[leg] = w;
                            next.emplace_back(std::move(k2), c * cw);
                        }
                    partial = std::move(next);
                }
                for (auto& [key, c] : partial) r.add_term(std::move(key), std::move(c));
            }
        return r;
    }

    // substitute an NCPoly-valued map into one leg
    template <std::size_t N>
    TensorPoly<N> apply_leg(const TensorPoly<N>& t, std::size_t leg,
                            const std::function<NCPoly(const Word&)>& f) const {
        TensorPoly<N> r;
        for (const auto& [k, c] : t.terms()) {
            NCPoly img = f(k[leg]);
            for (const auto& [w, cw] : img.terms()) {
                auto k2 = k;
                k2[leg] = w;
                r.add_term(std::move(k2), c * cw);
            }
        }
        return r;
    }

    // apply a scalar functional to one leg, dropping it
    template <std::size_t N>
    TensorPoly<N - 1> scalar_leg(const TensorPoly<N>& t, std::size_t leg,
                                 const std::function<ScalarQ(const Word&)>& f) const {
        static_assert(N >= 2);
        TensorPoly<N - 1> r;
        for (const auto& [k, c] : t.terms()) {
            ScalarQ v = f(k[leg]);
            if (v.is_zero()) continue;
            typename TensorPoly<N - 1>::Key k2;
            for (std::size_t i = 0, j = 0; i < N; ++i)
                if (i != leg) k2[j++] = k[i];
            r.add_term(std::move(k2), c * v);
        }
        return r;
    }

    // comultiply leg `leg`, splitting it into legs (leg, leg+1)
    template <std::size_t N>
    TensorPoly<N + 1> comultiply_leg(const TensorPoly<N>& t, std::size_t leg) const {
        TensorPoly<N + 1> r;
        for (const auto& [k, c] : t.terms()) {
            const TensorPoly<2>& d = delta_word(k[leg]);
            for (const auto& [dk, dc] : d.terms()) {
                typename TensorPoly<N + 1>::Key k2;
                for (std::size_t i = 0; i < leg; ++i) k2[i] = k[i];
                k2[leg] = dk[0];
                k2[leg + 1] = dk[1];
                for (std::size_t i = leg + 1; i < N; ++i) k2[i + 1] = k[i];
                r.add_term(std::move(k2), c * dc);
            }
        }
        return r;
    }

    // multiply legs (leg, leg+1) together
    template <std::size_t N>
    TensorPoly<N - 1> merge_legs(const TensorPoly<N>& t, std::size_t leg) const {
        static_assert(N >= 2);
        TensorPoly<N - 1> r;
        for (const auto& [k, c] : t.terms()) {
            const NCPoly& prod = nf_word(k[leg] + k[leg + 1]);
            for (const auto& [w, cw] : prod.terms()) {
                typename TensorPoly<N - 1>::Key k2;
                for (std::size_t i = 0; i < leg; ++i) k2[i] = k[i];
                k2[leg] = w;
                for (std::size_t i = leg + 2; i < N; ++i) k2[i - 1] = k[i];
                r.add_term(std::move(k2), c * cw);
            }
        }
        return r;
    }

    TensorPoly<1> as_tensor(const NCPoly& p) const {
        TensorPoly<1> t;
        NCPoly n = normalize(p);
        for (const auto& [w, c] : n.terms()) t.add_term({w}, c);
        return t;
    }

    // ---- corepresentations ----------------------------------------------------

    const CorepMatrix& build_corep(HalfInt l) const {
        if (l.twice < 0) throw DomainError("corepresentation label must be >= 0");
        if (l > spin_bound_)
            throw ResourceError("spin " + l.to_string() + " exceeds the configured bound " +
                                spin_bound_.to_string());
        {
            std::lock_guard lock(mutex_);
            auto it = corep_cache_.find(l.twice);
            if (it != corep_cache_.end()) return *it->second;
        }
        auto built = std::make_unique<CorepMatrix>(construct_corep(l));
        std::lock_guard lock(mutex_);
        auto [it, inserted] = corep_cache_.try_emplace(l.twice, std::move(built));
        return *it->second;
    }

    // dim of { T : corep(l3) . T = T . (corep(l1) (x) corep(l2)) }
    std::size_t intertwiner_dim(HalfInt l1, HalfInt l2, HalfInt l3) const {
        const CorepMatrix& c3 = build_corep(l3);
        auto [tensor, tweight] = tensor_corep(build_corep(l1), build_corep(l2));
        return solve_intertwiner(c3.entry, c3.col_weight, tensor, tweight).size();
    }

private:
    ScalarQ haar_moment(long m) const {
        // (1 - q^2) / (1 - q^{2m+2})
        LaurentPoly num(1);
        num -= LaurentPoly::monomial(1, 2);
        LaurentPoly den(1);
        den -= LaurentPoly::monomial(1, 2 * m + 2);
        return ScalarQ(num, den);
    }

    std::pair<std::vector<std::vector<NCPoly>>, std::vector<long>>
    tensor_corep(const CorepMatrix& x, const CorepMatrix& y) const {
        std::size_t nx = x.dim(), ny = y.dim();
        std::vector<std::vector<NCPoly>> entry(nx * ny, std::vector<NCPoly>(nx * ny));
        std::vector<long> weight(nx * ny);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) {
                weight[i * ny + j] = x.col_weight[i] + y.col_weight[j];
                for (std::size_t k = 0; k < nx; ++k)
                    for (std::size_t m = 0; m < ny; ++m)
                        entry[i * ny + j][k * ny + m] = mul(x.entry[i][k], y.entry[j][m]);
            }
        return {std::move(entry), std::move(weight)};
    }

    // Basis of the solution space of A.T = T.B over ScalarQ, where A, B are
    // corepresentation matrices with the given column weights. Applying pi
    // entrywise to the equation forces T[r][c] = 0 unless wA[r] = wB[c], so
    // only those cells enter as unknowns. Each returned vector lists the
    // values of the unknown cells, in the order of `cells`.
    std::vector<std::vector<ScalarQ>>
    solve_intertwiner(const std::vector<std::vector<NCPoly>>& A, const std::vector<long>& wA,
                      const std::vector<std::vector<NCPoly>>& B, const std::vector<long>& wB,
                      std::vector<std::pair<std::size_t, std::size_t>>* cells_out = nullptr) const {
        std::size_t m = A.size(), n = B.size();
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        std::vector<std::vector<std::size_t>> cell_index(m, std::vector<std::size_t>(n, SIZE_MAX));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (wA[r] == wB[c]) {
                    cell_index[r][c] = cells.size();
                    cells.emplace_back(r, c);
                }
        RowReducer<ScalarQ> red(cells.size());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // sum_k A[i][k) T[k][j] - sum_k T[i][k] B[k][j] = 0
                std::map<Word, std::map<std::size_t, ScalarQ>, DegLexLess> rows;
                auto accumulate = [&](const NCPoly& coeff, std::size_t unknown, bool negate) {
                    for (const auto& [w, c] : coeff.terms()) {
                        auto& cell = rows[w][unknown];
                        cell += negate ? -c : c;
                    }
                };
                for (std::size_t k = 0; k < m; ++k)
                    if (cell_index[k][j] != SIZE_MAX) accumulate(A[i][k], cell_index[k][j], false);
                for (std::size_t k = 0; k < n; ++k)
                    if (cell_index[i][k] != SIZE_MAX) accumulate(B[k][j], cell_index[i][k], true);
                for (const auto& [w, sparse] : rows) {
                    std::vector<ScalarQ> row(cells.size(), ScalarQ(0));
                    bool nontrivial = false;
                    for (const auto& [u, c] : sparse)
                        if (!c.is_zero()) { row[u] = c; nontrivial = true; }
                    if (nontrivial) red.add_row(std::move(row));
                }
            }
        if (cells_out) *cells_out = cells;
        return red.nullspace_basis();
    }

    CorepMatrix construct_corep(HalfInt l) const {
        using namespace suq2_gen;
        if (l == HalfInt(0)) {
            CorepMatrix c{l, {{NCPoly::one()}}, {0}};
            return c;
        }
        if (l == HalfInt::half()) {
            const ScalarQ q = ScalarQ::q();
            CorepMatrix c;
            c.spin = l;
            c.entry = {{NCPoly::generator(a), -q * NCPoly::generator(gs)},
                       {NCPoly::generator(g), NCPoly::generator(as)}};
            c.col_weight = {1, -1};
            check_corep_weights(c);
            return c;
        }

        const CorepMatrix& u = build_corep(HalfInt::half());
        const CorepMatrix& lower_half = build_corep(HalfInt::from_twice(l.twice - 1));
        const CorepMatrix& below = build_corep(HalfInt::from_twice(l.twice - 2));
        auto [W, wW] = tensor_corep(lower_half, u);
        const std::size_t nt = W.size(), nb = below.dim(), target = l.dim();

        // embedding T of the lower spin and a normalized retraction Tminus
        std::vector<std::pair<std::size_t, std::size_t>> tcells, rcells;
        auto tbasis = solve_intertwiner(W, wW, below.entry, below.col_weight, &tcells);
        if (tbasis.size() != 1) throw VerificationError("corep embedding space is not one-dimensional");
        auto rbasis = solve_intertwiner(below.entry, below.col_weight, W, wW, &rcells);
        if (rbasis.size() != 1) throw VerificationError("corep retraction space is not one-dimensional");
        std::vector<std::vector<ScalarQ>> T(nt, std::vector<ScalarQ>(nb, ScalarQ(0)));
        for (std::size_t i = 0; i < tcells.size(); ++i) T[tcells[i].first][tcells[i].second] = tbasis[0][i];
        std::vector<std::vector<ScalarQ>> Tm(nb, std::vector<ScalarQ>(nt, ScalarQ(0)));
        for (std::size_t i = 0; i < rcells.size(); ++i) Tm[rcells[i].first][rcells[i].second] = rbasis[0][i];

        // Tminus T is a scalar multiple of the identity by irreducibility
        auto prod = mat_mul(Tm, T);
        ScalarQ lambda = prod[0][0];
        if (lambda.is_zero()) throw VerificationError("corep retraction does not split the embedding");
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (prod[i][j] != (i == j ? lambda : ScalarQ(0)))
                    throw VerificationError("corep retraction-embedding product is not scalar");
        ScalarQ inv = ScalarQ(1) / lambda;
        for (auto& row : Tm)
            for (auto& x : row) x = inv * x;

        // P projects onto the spin-l component along the lower spin
        auto P = identity_matrix<ScalarQ>(nt);
        auto TTm = mat_mul(T, Tm);
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < nt; ++j) P[i][j] -= TTm[i][j];

        // one basis column per weight, highest weight first
        std::vector<std::vector<ScalarQ>> B; // columns
        std::vector<std::size_t> pivot_row;
        std::vector<long> weights;
        for (long w = l.twice; w >= -l.twice; w -= 2) {
            RowReducer<ScalarQ> red(nt);
            for (std::size_t c = 0; c < nt; ++c) {
                if (wW[c] != w) continue;
                std::vector<ScalarQ> col(nt, ScalarQ(0));
                for (std::size_t r = 0; r < nt; ++r) col[r] = P[r][c];
                red.add_row(std::move(col));
            }
            if (red.rank() != 1)
                throw VerificationError("weight-" + std::to_string(w) +
                                        " component of the corepresentation is not one-dimensional");
            for (std::size_t r = 0; r < nt; ++r)
                if (!(red.rows()[0][r].is_zero()) && wW[r] != w)
                    throw VerificationError("corep basis vector mixes torus weights");
            B.push_back(red.rows()[0]);
            pivot_row.push_back(red.pivots()[0]);
            weights.push_back(w);
        }

        // extract V from W B = B V via the pivot coordinates, then verify
        CorepMatrix V;
        V.spin = l;
        V.col_weight = weights;
        V.entry.assign(target, std::vector<NCPoly>(target));
        for (std::size_t k = 0; k < target; ++k)
            for (std::size_t j = 0; j < target; ++j) {
                NCPoly e;
                for (std::size_t c = 0; c < nt; ++c)
                    if (!B[j][c].is_zero()) e += B[j][c] * W[pivot_row[k]][c];
                V.entry[k][j] = std::move(e);
            }
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < target; ++j) {
                NCPoly lhs, rhs;
                for (std::size_t c = 0; c < nt; ++c)
                    if (!B[j][c].is_zero()) lhs += B[j][c] * W[i][c];
                for (std::size_t k = 0; k < target; ++k)
                    if (!B[k][i].is_zero()) rhs += B[k][i] * V.entry[k][j];
                if (lhs != rhs) throw VerificationError("extracted corepresentation does not stabilize its basis");
            }

        Word top(static_cast<std::size_t>(l.twice), static_cast<char>(a));
        if (V.entry[0][0] != NCPoly::word(top))
            throw VerificationError("highest-weight entry is not alpha^(2l)");
        check_corep_weights(V);
        return V;
    }

    void check_corep_weights(const CorepMatrix& c) const {
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j) {
                auto z = pi(c.entry[i][j]);
                if (i != j) {
                    if (!z.empty()) throw VerificationError("pi of corepresentation is not diagonal");
                } else if (z.size() != 1 || z.begin()->first != c.col_weight[j] ||
                           z.begin()->second != ScalarQ(1)) {
                    throw VerificationError("pi of corepresentation diagonal is not the expected weight");
                }
            }
    }

    RewriteSystem system_;
    HalfInt spin_bound_;
    std::array<TensorPoly<2>, 4> delta_gen_;
    std::array<Gen, 4> antipode_gen_map_{};
    std::array<ScalarQ, 4> antipode_gen_scalar_;

    mutable std::mutex mutex_;
    mutable std::unordered_map<Word, NCPoly> nf_cache_;
    mutable std::unordered_map<Word, TensorPoly<2>> delta_cache_;
    mutable std::map<int, std::unique_ptr<CorepMatrix>> corep_cache_;
};

} // namespace qgw
