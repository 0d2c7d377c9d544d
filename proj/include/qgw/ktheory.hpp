#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qgw/halfint.hpp"
#include "qgw/laurent.hpp"

namespace qgw {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix r(x.rows, x.cols);
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
};

struct SNFResult {
    IntMatrix S, U, V; // U M V = S, U and V unimodular, S a divisor-chain diagonal
};

// Smith normal form; the pivot is always an entry of minimal nonzero absolute
// value in the remaining block, which keeps coefficient growth down.
inline SNFResult smith_normal_form(const IntMatrix& M) {
    SNFResult r{M, IntMatrix::identity(M.rows), IntMatrix::identity(M.cols)};
    IntMatrix& S = r.S;
    const std::size_t nmin = std::min(M.rows, M.cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < S.cols; ++k) std::swap(S.at(i, k), S.at(j, k));
        for (std::size_t k = 0; k < r.U.cols; ++k) std::swap(r.U.at(i, k), r.U.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < S.rows; ++k) std::swap(S.at(k, i), S.at(k, j));
        for (std::size_t k = 0; k < r.V.rows; ++k) std::swap(r.V.at(k, i), r.V.at(k, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t k = 0; k < S.cols; ++k) S.at(dst, k) += f * S.at(src, k);
        for (std::size_t k = 0; k < r.U.cols; ++k) r.U.at(dst, k) += f * r.U.at(src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t k = 0; k < S.rows; ++k) S.at(k, dst) += f * S.at(k, src);
        for (std::size_t k = 0; k < r.V.rows; ++k) r.V.at(k, dst) += f * r.V.at(k, src);
    };

    for (std::size_t t = 0; t < nmin; ++t) {
        while (true) {
            // minimal nonzero |entry| in the lower-right block
            std::size_t pi = t, pj = t;
            Int best(0);
            for (std::size_t i = t; i < S.rows; ++i)
                for (std::size_t j = t; j < S.cols; ++j) {
                    if (S.at(i, j) == 0) continue;
                    Int v = int_abs(S.at(i, j));
                    if (best == 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (best == 0) break; // block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < S.rows; ++i)
                if (S.at(i, t) != 0) {
                    Int f = S.at(i, t) / S.at(t, t);
                    add_row(i, t, -f);
                    if (S.at(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < S.cols; ++j)
                if (S.at(t, j) != 0) {
                    Int f = S.at(t, j) / S.at(t, t);
                    add_col(j, t, -f);
                    if (S.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // enforce the divisor chain: the pivot must divide the rest
            bool divides = true;
            for (std::size_t i = t + 1; i < S.rows && divides; ++i)
                for (std::size_t j = t + 1; j < S.cols; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (S.at(t, t) < 0) {
            for (std::size_t k = 0; k < S.cols; ++k) S.at(t, k) = -S.at(t, k);
            for (std::size_t k = 0; k < r.U.cols; ++k) r.U.at(t, k) = -r.U.at(t, k);
        }
    }
    return r;
}

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion; // divisor chain d1 | d2 | ..., each >= 2

    friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
        return x.free_rank == y.free_rank && x.torsion == y.torsion;
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
        for (const auto& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.get_str();
        }
        return s;
    }
};

inline std::size_t snf_rank(const IntMatrix& S) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows, S.cols); ++i)
        if (S.at(i, i) != 0) ++r;
    return r;
}

// ker(M) as a subgroup of Z^cols is free of rank cols - rank
inline AbelianGroup kernel_group(const IntMatrix& M) {
    auto snf = smith_normal_form(M);
    return {static_cast<long>(M.cols - snf_rank(snf.S)), {}};
}

inline AbelianGroup cokernel_group(const IntMatrix& M) {
    auto snf = smith_normal_form(M);
    AbelianGroup g;
    g.free_rank = static_cast<long>(M.rows - snf_rank(snf.S));
    for (std::size_t i = 0; i < std::min(M.rows, M.cols); ++i)
        if (snf.S.at(i, i) >= 2) g.torsion.push_back(snf.S.at(i, i));
    return g;
}

// The six-term sequence with two vanishing corners unrolls to
//   0 -> K1 -> Z^a -> Z^b -> K0 -> 0,
// so K1 = ker(boundary) and K0 = coker(boundary).
inline std::pair<AbelianGroup, AbelianGroup> resolve_five_term(const IntMatrix& boundary) {
    return {cokernel_group(boundary), kernel_group(boundary)};
}

struct PVResult {
    AbelianGroup K0, K1;
    std::string note;
};

// Pimsner-Voiculescu for a crossed product by a single automorphism: the maps
// are id - alpha_* on the free groups K_0(A), K_1(A).
inline PVResult pv_solve(const IntMatrix& alpha0, const IntMatrix& alpha1) {
    if (alpha0.rows != alpha0.cols || alpha1.rows != alpha1.cols)
        throw DomainError("pv_solve: the induced automorphisms must be square matrices");
    IntMatrix m0 = IntMatrix::identity(alpha0.rows) - alpha0;
    IntMatrix m1 = IntMatrix::identity(alpha1.rows) - alpha1;
    AbelianGroup c0 = cokernel_group(m0), c1 = cokernel_group(m1);
    AbelianGroup k0 = kernel_group(m0), k1 = kernel_group(m1);
    PVResult r;
    r.K0 = {c0.free_rank + k1.free_rank, c0.torsion};
    r.K1 = {c1.free_rank + k0.free_rank, c1.torsion};
    r.note = "extension 0 -> coker(id - alpha_i) -> K_i -> ker(id - alpha_{1-i}) -> 0 splits: "
             "kernels of integer matrices are free";
    return r;
}

// ---- fusion and restriction bookkeeping --------------------------------------

// spins |l1 - l2|, |l1 - l2| + 1, ..., l1 + l2
inline std::vector<HalfInt> fusion(HalfInt l1, HalfInt l2) {
    std::vector<HalfInt> out;
    for (int t = (l1 - l2).abs().twice; t <= (l1 + l2).twice; t += 2) out.push_back(HalfInt::from_twice(t));
    return out;
}

// the labels are integral and pairwise fusion stays integral, so the label
// set generates a fusion-closed subcategory
inline bool integral_labels_closed(const std::vector<HalfInt>& labels) {
    for (HalfInt l : labels)
        if (!l.is_integral()) return false;
    for (HalfInt l1 : labels)
        for (HalfInt l2 : labels)
            for (HalfInt l : fusion(l1, l2))
                if (!l.is_integral()) return false;
    return true;
}

// character of the restriction to the torus: sum of z^{2j}, j = -l..l
inline LaurentPoly restriction_character(HalfInt l) {
    LaurentPoly p;
    for (int t = -l.twice; t <= l.twice; t += 2) p += LaurentPoly::monomial(1, t);
    return p;
}

} // namespace qgw
