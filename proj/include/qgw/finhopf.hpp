#pragma once

#include <string>
#include <vector>

#include "qgw/arith.hpp"
#include "qgw/linalg.hpp"

namespace qgw {

// Dense 3-index coefficient tensor with independent leg dimensions.
template <class F>
struct Tensor3 {
    std::size_t n1 = 0, n2 = 0, n3 = 0;
    std::vector<F> a;

    Tensor3() = default;
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
        : n1(d1), n2(d2), n3(d3), a(d1 * d2 * d3, F(0)) {}

    F& at(std::size_t i, std::size_t j, std::size_t k) { return a[(i * n2 + j) * n3 + k]; }
    const F& at(std::size_t i, std::size_t j, std::size_t k) const { return a[(i * n2 + j) * n3 + k]; }

    friend bool operator==(const Tensor3& x, const Tensor3& y) {
        return x.n1 == y.n1 && x.n2 == y.n2 && x.n3 == y.n3 && x.a == y.a;
    }
};

// A finite-dimensional Hopf algebra as structure tensors over an exact field:
//   e_i e_j = sum_k mult(i,j,k) e_k          1 = sum_k unit[k] e_k
//   Delta(e_i) = sum_{j,k} comult(i,j,k) e_j (x) e_k
//   eps(e_i) = counit[i]                     S(e_i) = sum_j antipode[i][j] e_j
template <class F>
struct FinHopf {
    std::size_t dim = 0;
    Tensor3<F> mult;
    std::vector<F> unit;
    Tensor3<F> comult;
    std::vector<F> counit;
    Mat<F> antipode;

    friend bool operator==(const FinHopf& x, const FinHopf& y) {
        return x.dim == y.dim && x.mult == y.mult && x.unit == y.unit && x.comult == y.comult &&
               x.counit == y.counit && x.antipode == y.antipode;
    }
};

// Multiplication-only view, used for tensor-product algebras and ad(w).
template <class F>
struct DenseAlgebra {
    std::size_t dim = 0;
    Tensor3<F> mult;
    std::vector<F> unit;
};

template <class F>
DenseAlgebra<F> algebra_of(const FinHopf<F>& h) {
    return {h.dim, h.mult, h.unit};
}

template <class F>
std::vector<F> alg_mul(const DenseAlgebra<F>& alg, const std::vector<F>& x, const std::vector<F>& y) {
    std::vector<F> r(alg.dim, F(0));
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (x[i] == F(0)) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (y[j] == F(0)) continue;
            F c = x[i] * y[j];
            for (std::size_t k = 0; k < alg.dim; ++k) {
                const F& m = alg.mult.at(i, j, k);
                if (!(m == F(0))) r[k] += c * m;
            }
        }
    }
    return r;
}

template <class F>
DenseAlgebra<F> tensor_algebra(const DenseAlgebra<F>& x, const DenseAlgebra<F>& y) {
    DenseAlgebra<F> r;
    r.dim = x.dim * y.dim;
    r.mult = Tensor3<F>(r.dim, r.dim, r.dim);
    r.unit.assign(r.dim, F(0));
    for (std::size_t i1 = 0; i1 < x.dim; ++i1)
        for (std::size_t i2 = 0; i2 < y.dim; ++i2) {
            r.unit[i1 * y.dim + i2] = x.unit[i1] * y.unit[i2];
            for (std::size_t j1 = 0; j1 < x.dim; ++j1)
                for (std::size_t j2 = 0; j2 < y.dim; ++j2)
                    for (std::size_t k1 = 0; k1 < x.dim; ++k1) {
                        if (x.mult.at(i1, j1, k1) == F(0)) continue;
                        for (std::size_t k2 = 0; k2 < y.dim; ++k2) {
                            const F& m2 = y.mult.at(i2, j2, k2);
                            if (m2 == F(0)) continue;
                            r.mult.at(i1 * y.dim + i2, j1 * y.dim + j2, k1 * y.dim + k2) =
                                x.mult.at(i1, j1, k1) * m2;
                        }
                    }
        }
    return r;
}

// ---- axiom verification -----------------------------------------------------

struct HopfReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const {
        if (ok()) return "all Hopf axioms hold";
        std::string s = "failed:";
        for (const auto& f : failures) s += " " + f;
        return s;
    }
};

template <class F>
HopfReport verify_hopf(const FinHopf<F>& h) {
    HopfReport rep;
    const std::size_t n = h.dim;
    auto fail = [&](const std::string& what) {
        if (rep.failures.empty() || rep.failures.back() != what) rep.failures.push_back(what);
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                for (std::size_t k = 0; k < n; ++k) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < n; ++x) {
                        lhs += h.mult.at(i, j, x) * h.mult.at(x, k, l);
                        rhs += h.mult.at(j, k, x) * h.mult.at(i, x, l);
                    }
                    if (!(lhs == rhs)) fail("associativity");
                }
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left(0), right(0);
            for (std::size_t x = 0; x < n; ++x) {
                left += h.unit[x] * h.mult.at(x, i, k);
                right += h.unit[x] * h.mult.at(i, x, k);
            }
            F expect = i == k ? F(1) : F(0);
            if (!(left == expect)) fail("left unit");
            if (!(right == expect)) fail("right unit");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t z = 0; z < n; ++z) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < n; ++x) {
                        lhs += h.comult.at(i, x, z) * h.comult.at(x, a, b);
                        rhs += h.comult.at(i, a, x) * h.comult.at(x, b, z);
                    }
                    if (!(lhs == rhs)) fail("coassociativity");
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left(0), right(0);
            for (std::size_t x = 0; x < n; ++x) {
                left += h.comult.at(i, x, k) * h.counit[x];
                right += h.comult.at(i, k, x) * h.counit[x];
            }
            F expect = i == k ? F(1) : F(0);
            if (!(left == expect)) fail("left counit");
            if (!(right == expect)) fail("right counit");
        }
    // bialgebra compatibility: Delta and eps are algebra maps
    {
        std::vector<F> rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::fill(rhs.begin(), rhs.end(), F(0));
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const F& ci = h.comult.at(i, p, q);
                        if (ci == F(0)) continue;
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t s = 0; s < n; ++s) {
                                const F& cj = h.comult.at(j, r, s);
                                if (cj == F(0)) continue;
                                F c = ci * cj;
                                for (std::size_t a = 0; a < n; ++a) {
                                    const F& ma = h.mult.at(p, r, a);
                                    if (ma == F(0)) continue;
                                    F cma = c * ma;
                                    for (std::size_t b = 0; b < n; ++b) {
                                        const F& mb = h.mult.at(q, s, b);
                                        if (!(mb == F(0))) rhs[a * n + b] += cma * mb;
                                    }
                                }
                            }
                    }
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        F lhs(0);
                        for (std::size_t k = 0; k < n; ++k) lhs += h.mult.at(i, j, k) * h.comult.at(k, a, b);
                        if (!(lhs == rhs[a * n + b])) fail("comultiplication multiplicative");
                    }
                F el(0);
                for (std::size_t k = 0; k < n; ++k) el += h.mult.at(i, j, k) * h.counit[k];
                if (!(el == h.counit[i] * h.counit[j])) fail("counit multiplicative");
            }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            F lhs(0);
            for (std::size_t k = 0; k < n; ++k) lhs += h.unit[k] * h.comult.at(k, a, b);
            if (!(lhs == h.unit[a] * h.unit[b])) fail("comultiplication unital");
        }
    {
        F e1(0);
        for (std::size_t k = 0; k < n; ++k) e1 += h.unit[k] * h.counit[k];
        if (!(e1 == F(1))) fail("counit unital");
    }
    // antipode axiom: m(S (x) id)Delta = unit . counit = m(id (x) S)Delta
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left(0), right(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (h.comult.at(i, a, b) == F(0)) continue;
                    for (std::size_t x = 0; x < n; ++x) {
                        left += h.comult.at(i, a, b) * h.antipode[a][x] * h.mult.at(x, b, k);
                        right += h.comult.at(i, a, b) * h.antipode[b][x] * h.mult.at(a, x, k);
                    }
                }
            F expect = h.counit[i] * h.unit[k];
            if (!(left == expect)) fail("antipode (left)");
            if (!(right == expect)) fail("antipode (right)");
        }
    return rep;
}

// ---- duality ----------------------------------------------------------------

// (H*)^cop: the dual Hopf algebra with flipped coproduct. With e^j(e_i) =
// delta_ij the structure tensors are transposes of H's; the cop twist forces
// the inverse of the transposed antipode.
template <class F>
FinHopf<F> dual_cop(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    FinHopf<F> d;
    d.dim = n;
    d.mult = Tensor3<F>(n, n, n);
    d.comult = Tensor3<F>(n, n, n);
    d.unit = h.counit;
    d.counit = h.unit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.mult.at(i, j, k) = h.comult.at(k, i, j);
                d.comult.at(i, j, k) = h.mult.at(k, j, i);
            }
    Mat<F> st(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) st[i][j] = h.antipode[j][i];
    d.antipode = mat_inverse(st);
    return d;
}

// ---- the bicharacter and the Drinfeld codouble ------------------------------

// w = sum_j e_j (x) e^j inside H (x) (H*)^cop
template <class F>
struct BicharacterElement {
    DenseAlgebra<F> host;   // the tensor product algebra H (x) H*
    std::vector<F> coeff;   // dim(H)^2 coefficients of w
    std::vector<F> inverse; // (S (x) id)(w)
};

template <class F>
BicharacterElement<F> bicharacter(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    FinHopf<F> hd = dual_cop(h);
    DenseAlgebra<F> H = algebra_of(h), D = algebra_of(hd);
    BicharacterElement<F> w;
    w.host = tensor_algebra(H, D);
    w.coeff.assign(n * n, F(0));
    for (std::size_t j = 0; j < n; ++j) w.coeff[j * n + j] = F(1);

    // (eps (x) id)(w) = 1 and (id (x) eps^)(w) = 1
    for (std::size_t p = 0; p < n; ++p) {
        F lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += h.counit[j] * w.coeff[j * n + p];
        if (!(lhs == D.unit[p])) throw VerificationError("bicharacter: (eps (x) id)(w) != 1");
    }
    for (std::size_t k = 0; k < n; ++k) {
        F lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += w.coeff[k * n + j] * hd.counit[j];
        if (!(lhs == H.unit[k])) throw VerificationError("bicharacter: (id (x) eps^)(w) != 1");
    }

    // (Delta (x) id)(w) = w13 w23 in H (x) H (x) H*
    {
        DenseAlgebra<F> T = tensor_algebra(tensor_algebra(H, H), D);
        std::vector<F> lhs(T.dim, F(0)), w13(T.dim, F(0)), w23(T.dim, F(0));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b = 0; b < n; ++b)
                    lhs[(a2 * n + b) * n + p] = h.comult.at(p, a2, b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t u = 0; u < n; ++u) {
                w13[(i * n + u) * n + i] += H.unit[u];
                w23[(u * n + i) * n + i] += H.unit[u];
            }
        if (!(alg_mul(T, w13, w23) == lhs))
            throw VerificationError("bicharacter: (Delta (x) id)(w) != w13 w23");
    }
    // (id (x) Delta^)(w) = w13 w12 in H (x) H* (x) H*
    {
        DenseAlgebra<F> T = tensor_algebra(tensor_algebra(H, D), D);
        std::vector<F> lhs(T.dim, F(0)), w13(T.dim, F(0)), w12(T.dim, F(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b = 0; b < n; ++b)
                    lhs[(j * n + a2) * n + b] = hd.comult.at(j, a2, b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t u = 0; u < n; ++u) {
                w13[(i * n + u) * n + i] += D.unit[u];
                w12[(i * n + i) * n + u] += D.unit[u];
            }
        if (!(alg_mul(T, w13, w12) == lhs))
            throw VerificationError("bicharacter: (id (x) Delta^)(w) != w13 w12");
    }
    // invertibility, with inverse (S (x) id)(w)
    w.inverse.assign(n * n, F(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) w.inverse[k * n + j] = h.antipode[j][k];
    if (!(alg_mul(w.host, w.coeff, w.inverse) == w.host.unit) ||
        !(alg_mul(w.host, w.inverse, w.coeff) == w.host.unit))
        throw VerificationError("bicharacter: (S (x) id)(w) is not a two-sided inverse");
    return w;
}

// The Drinfeld codouble D_H = H (x) (H*)^cop with the tensor product algebra
// structure, coproduct (id (x) sigma (x) id)(id (x) ad(w) (x) id)(Delta (x) Delta^),
// counit eps (x) eps^ and antipode (S (x) S^) ad(w).
template <class F>
FinHopf<F> codouble(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    FinHopf<F> hd = dual_cop(h);
    BicharacterElement<F> w = bicharacter(h);
    const DenseAlgebra<F>& D = w.host;

    FinHopf<F> dd;
    dd.dim = n * n;
    dd.mult = D.mult;
    dd.unit = D.unit;
    dd.counit.assign(dd.dim, F(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) dd.counit[i * n + p] = h.counit[i] * hd.counit[p];

    dd.comult = Tensor3<F>(dd.dim, dd.dim, dd.dim);
    std::vector<F> mid(dd.dim, F(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t g = 0; g < n; ++g) {
                    // middle legs (b, c) of (Delta (x) Delta^), conjugated by w
                    std::fill(mid.begin(), mid.end(), F(0));
                    bool any = false;
                    for (std::size_t b = 0; b < n; ++b) {
                        if (h.comult.at(i, a, b) == F(0)) continue;
                        for (std::size_t c = 0; c < n; ++c) {
                            if (hd.comult.at(p, c, g) == F(0)) continue;
                            mid[b * n + c] = h.comult.at(i, a, b) * hd.comult.at(p, c, g);
                            any = true;
                        }
                    }
                    if (!any) continue;
                    std::vector<F> conj = alg_mul(D, w.coeff, alg_mul(D, mid, w.inverse));
                    for (std::size_t b = 0; b < n; ++b)
                        for (std::size_t c = 0; c < n; ++c) {
                            if (conj[b * n + c] == F(0)) continue;
                            // sigma swaps the two middle legs
                            dd.comult.at(i * n + p, a * n + c, b * n + g) += conj[b * n + c];
                        }
                }
        }

    dd.antipode.assign(dd.dim, std::vector<F>(dd.dim, F(0)));
    std::vector<F> basis(dd.dim, F(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) {
            std::fill(basis.begin(), basis.end(), F(0));
            basis[i * n + p] = F(1);
            std::vector<F> conj = alg_mul(D, w.coeff, alg_mul(D, basis, w.inverse));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t q = 0; q < n; ++q) {
                    if (conj[j * n + q] == F(0)) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (h.antipode[j][k] == F(0)) continue;
                        for (std::size_t r = 0; r < n; ++r)
                            dd.antipode[i * n + p][k * n + r] +=
                                conj[j * n + q] * h.antipode[j][k] * hd.antipode[q][r];
                    }
                }
        }
    return dd;
}

// canonical projections out of the codouble
template <class F>
Mat<F> codouble_pi(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    Mat<F> m(n * n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) m[i * n + p][i] = h.unit[p]; // eps^(f_p) = unit[p]
    return m;
}

template <class F>
Mat<F> codouble_pi_hat(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    Mat<F> m(n * n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) m[i * n + p][p] = h.counit[i];
    return m;
}

// checks that phi (rows: phi(e_i) = sum_j mat[i][j] e'_j) is a Hopf algebra
// homomorphism from src to dst
template <class F>
std::vector<std::string> check_hopf_hom(const FinHopf<F>& src, const FinHopf<F>& dst, const Mat<F>& mat) {
    std::vector<std::string> failures;
    auto fail = [&](const std::string& s) {
        if (failures.empty() || failures.back() != s) failures.push_back(s);
    };
    const std::size_t n = src.dim, m = dst.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                F lhs(0), rhs(0);
                for (std::size_t x = 0; x < n; ++x) lhs += src.mult.at(i, j, x) * mat[x][k];
                for (std::size_t p = 0; p < m; ++p) {
                    if (mat[i][p] == F(0)) continue;
                    for (std::size_t q = 0; q < m; ++q) rhs += mat[i][p] * mat[j][q] * dst.mult.at(p, q, k);
                }
                if (!(lhs == rhs)) fail("multiplicativity");
            }
    for (std::size_t k = 0; k < m; ++k) {
        F img(0);
        for (std::size_t x = 0; x < n; ++x) img += src.unit[x] * mat[x][k];
        if (!(img == dst.unit[k])) fail("unit");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                F lhs(0), rhs(0);
                for (std::size_t x = 0; x < m; ++x) lhs += mat[i][x] * dst.comult.at(x, a, b);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const F& c = src.comult.at(i, p, q);
                        if (c == F(0)) continue;
                        rhs += c * mat[p][a] * mat[q][b];
                    }
                if (!(lhs == rhs)) fail("comultiplicativity");
            }
        F eps_img(0);
        for (std::size_t x = 0; x < m; ++x) eps_img += mat[i][x] * dst.counit[x];
        if (!(eps_img == src.counit[i])) fail("counit");
        for (std::size_t k = 0; k < m; ++k) {
            F lhs(0), rhs(0);
            for (std::size_t x = 0; x < n; ++x) lhs += src.antipode[i][x] * mat[x][k];
            for (std::size_t x = 0; x < m; ++x) rhs += mat[i][x] * dst.antipode[x][k];
            if (!(lhs == rhs)) fail("antipode");
        }
    }
    return failures;
}

// ---- Yetter-Drinfeld modules -------------------------------------------------

// carrier with action e_i . v_j = sum_k action(i,j,k) v_k and coaction
// delta(v_j) = sum coaction(j,a,k) e_a (x) v_k
template <class F>
struct YDModule {
    std::size_t dim = 0;
    Tensor3<F> action;   // (hopf, carrier, carrier)
    Tensor3<F> coaction; // (carrier, hopf, carrier)
};

template <class F>
struct Comodule {
    std::size_t dim = 0;
    Tensor3<F> coaction; // (carrier, hopf, carrier)
};

template <class F>
bool verify_module(const FinHopf<F>& h, const Tensor3<F>& act, std::size_t m) {
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j)
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t k = 0; k < m; ++k) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < h.dim; ++x) lhs += h.mult.at(i, j, x) * act.at(x, v, k);
                    for (std::size_t x = 0; x < m; ++x) rhs += act.at(j, v, x) * act.at(i, x, k);
                    if (!(lhs == rhs)) return false;
                }
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t k = 0; k < m; ++k) {
            F lhs(0);
            for (std::size_t x = 0; x < h.dim; ++x) lhs += h.unit[x] * act.at(x, v, k);
            if (!(lhs == (v == k ? F(1) : F(0)))) return false;
        }
    return true;
}

template <class F>
bool verify_comodule(const FinHopf<F>& h, const Tensor3<F>& coa, std::size_t m) {
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t a = 0; a < h.dim; ++a)
            for (std::size_t b = 0; b < h.dim; ++b)
                for (std::size_t k = 0; k < m; ++k) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < h.dim; ++x) lhs += coa.at(j, x, k) * h.comult.at(x, a, b);
                    for (std::size_t x = 0; x < m; ++x) rhs += coa.at(j, a, x) * coa.at(x, b, k);
                    if (!(lhs == rhs)) return false;
                }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            F lhs(0);
            for (std::size_t x = 0; x < h.dim; ++x) lhs += coa.at(j, x, k) * h.counit[x];
            if (!(lhs == (j == k ? F(1) : F(0)))) return false;
        }
    return true;
}

// (f . m)_(-1) (x) (f . m)_(0) = f_(1) m_(-1) S(f_(3)) (x) f_(2) . m_(0)
template <class F>
bool verify_yd(const FinHopf<F>& h, const YDModule<F>& mod) {
    const std::size_t n = h.dim, m = mod.dim;
    // Delta^2 with legs (p, q, r)
    Tensor3<F> d2(n, n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t r = 0; r < n; ++r) {
                if (h.comult.at(i, x, r) == F(0)) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        d2.at(i, p, q * n + r) += h.comult.at(i, x, r) * h.comult.at(x, p, q);
            }
    // sandwich(p,b,r,a): coefficient of e_a in e_p e_b S(e_r)
    std::vector<F> sandwich(n * n * n * n, F(0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t x = 0; x < n; ++x) {
                    if (h.antipode[r][x] == F(0)) continue;
                    for (std::size_t y = 0; y < n; ++y) {
                        if (h.mult.at(p, b, y) == F(0)) continue;
                        F c = h.mult.at(p, b, y) * h.antipode[r][x];
                        for (std::size_t a = 0; a < n; ++a) {
                            const F& m2 = h.mult.at(y, x, a);
                            if (!(m2 == F(0))) sandwich[((p * n + b) * n + r) * n + a] += c * m2;
                        }
                    }
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t l = 0; l < m; ++l) {
                    F lhs(0), rhs(0);
                    for (std::size_t k = 0; k < m; ++k) lhs += mod.action.at(i, j, k) * mod.coaction.at(k, a, l);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q)
                            for (std::size_t r = 0; r < n; ++r) {
                                const F& c = d2.at(i, p, q * n + r);
                                if (c == F(0)) continue;
                                for (std::size_t b = 0; b < n; ++b)
                                    for (std::size_t lp = 0; lp < m; ++lp) {
                                        const F& cm = mod.coaction.at(j, b, lp);
                                        if (cm == F(0)) continue;
                                        const F& act = mod.action.at(q, lp, l);
                                        if (act == F(0)) continue;
                                        const F& prod = sandwich[((p * n + b) * n + r) * n + a];
                                        if (!(prod == F(0))) rhs += c * cm * act * prod;
                                    }
                            }
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

// H acting on itself by h . x = h_(1) x S(h_(2)), with coaction Delta
template <class F>
YDModule<F> adjoint_yd_module(const FinHopf<F>& h) {
    const std::size_t n = h.dim;
    YDModule<F> mod;
    mod.dim = n;
    mod.coaction = h.comult;
    mod.action = Tensor3<F>(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const F& c = h.comult.at(i, a, b);
                if (c == F(0)) continue;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t x = 0; x < n; ++x) {
                        if (h.mult.at(a, j, x) == F(0)) continue;
                        for (std::size_t s = 0; s < n; ++s) {
                            if (h.antipode[b][s] == F(0)) continue;
                            for (std::size_t k = 0; k < n; ++k)
                                mod.action.at(i, j, k) += c * h.mult.at(a, j, x) * h.antipode[b][s] *
                                                          h.mult.at(x, s, k);
                        }
                    }
            }
    return mod;
}

// ---- the YD <-> codouble-comodule correspondence -----------------------------

template <class F>
Comodule<F> yd_to_codouble(const FinHopf<F>& h, const YDModule<F>& mod) {
    if (!verify_yd(h, mod)) throw DomainError("yd_to_codouble: the YD compatibility square does not commute");
    const std::size_t n = h.dim, m = mod.dim;
    Comodule<F> c;
    c.dim = m;
    c.coaction = Tensor3<F>(m, n * n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t k = 0; k < m; ++k) {
                    F v(0);
                    for (std::size_t x = 0; x < m; ++x) v += mod.coaction.at(j, a, x) * mod.action.at(p, x, k);
                    c.coaction.at(j, a * n + p, k) = v;
                }
    return c;
}

template <class F>
YDModule<F> codouble_to_yd(const FinHopf<F>& h, const Comodule<F>& c) {
    const std::size_t n = h.dim, m = c.dim;
    YDModule<F> mod;
    mod.dim = m;
    mod.coaction = Tensor3<F>(m, n, m);
    mod.action = Tensor3<F>(n, m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t a = 0; a < n; ++a) {
                F via_pi(0), via_pi_hat(0);
                for (std::size_t p = 0; p < n; ++p) {
                    via_pi += c.coaction.at(j, a * n + p, k) * h.unit[p];
                    via_pi_hat += c.coaction.at(j, p * n + a, k) * h.counit[p];
                }
                mod.coaction.at(j, a, k) = via_pi;
                mod.action.at(a, j, k) = via_pi_hat; // dual pairing with e^a
            }
    return mod;
}

// ---- braided tensor product ---------------------------------------------------

// mu_{A (x) B} = (mu_A (x) mu_B)(id (x) gamma_{BA} (x) id) with the left-left
// YD braiding gamma(b (x) a) = (b_(-1) . a) (x) b_(0): B's coaction drives
// A's module structure.
template <class F>
DenseAlgebra<F> braided_product(const FinHopf<F>& h, const DenseAlgebra<F>& A, const YDModule<F>& a_struct,
                                const DenseAlgebra<F>& B, const Tensor3<F>& b_coaction) {
    const std::size_t n = h.dim, da = A.dim, db = B.dim;
    if (a_struct.dim != da) throw DomainError("braided_product: YD carrier does not match algebra A");
    if (!verify_module(h, a_struct.action, da) || !verify_comodule(h, a_struct.coaction, da) ||
        !verify_yd(h, a_struct))
        throw DomainError("braided_product: A is not a Yetter-Drinfeld module");
    if (!verify_comodule(h, b_coaction, db)) throw DomainError("braided_product: B is not an H-comodule");

    // A is a module algebra and comodule algebra; B a comodule algebra
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t y = 0; y < da; ++y) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < da; ++x) lhs += A.mult.at(j, k, x) * a_struct.action.at(i, x, y);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            const F& c = h.comult.at(i, p, q);
                            if (c == F(0)) continue;
                            for (std::size_t jp = 0; jp < da; ++jp) {
                                const F& aj = a_struct.action.at(p, j, jp);
                                if (aj == F(0)) continue;
                                for (std::size_t kp = 0; kp < da; ++kp)
                                    rhs += c * aj * a_struct.action.at(q, k, kp) * A.mult.at(jp, kp, y);
                            }
                        }
                    if (!(lhs == rhs)) throw DomainError("braided_product: A is not a module algebra");
                }
    auto comodule_algebra = [&](const DenseAlgebra<F>& alg, const Tensor3<F>& coa) {
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t y = 0; y < alg.dim; ++y) {
                        F lhs(0), rhs(0);
                        for (std::size_t x = 0; x < alg.dim; ++x) lhs += alg.mult.at(j, k, x) * coa.at(x, a, y);
                        for (std::size_t a1 = 0; a1 < n; ++a1)
                            for (std::size_t jp = 0; jp < alg.dim; ++jp) {
                                const F& cj = coa.at(j, a1, jp);
                                if (cj == F(0)) continue;
                                for (std::size_t a2 = 0; a2 < n; ++a2) {
                                    const F& mh = h.mult.at(a1, a2, a);
                                    if (mh == F(0)) continue;
                                    for (std::size_t kp = 0; kp < alg.dim; ++kp)
                                        rhs += cj * coa.at(k, a2, kp) * mh * alg.mult.at(jp, kp, y);
                                }
                            }
                        if (!(lhs == rhs)) return false;
                    }
        return true;
    };
    if (!comodule_algebra(A, a_struct.coaction))
        throw DomainError("braided_product: A is not a comodule algebra");
    if (!comodule_algebra(B, b_coaction)) throw DomainError("braided_product: B is not a comodule algebra");

    DenseAlgebra<F> r;
    r.dim = da * db;
    r.mult = Tensor3<F>(r.dim, r.dim, r.dim);
    r.unit.assign(r.dim, F(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) r.unit[i * db + j] = A.unit[i] * B.unit[j];
    for (std::size_t a1 = 0; a1 < da; ++a1)
        for (std::size_t b1 = 0; b1 < db; ++b1)
            for (std::size_t a2 = 0; a2 < da; ++a2)
                for (std::size_t b2 = 0; b2 < db; ++b2)
                    for (std::size_t hh = 0; hh < n; ++hh)
                        for (std::size_t b0 = 0; b0 < db; ++b0) {
                            const F& cb = b_coaction.at(b1, hh, b0);
                            if (cb == F(0)) continue;
                            for (std::size_t a1p = 0; a1p < da; ++a1p) {
                                const F& ca = a_struct.action.at(hh, a2, a1p);
                                if (ca == F(0)) continue;
                                for (std::size_t ak = 0; ak < da; ++ak) {
                                    const F& ma = A.mult.at(a1, a1p, ak);
                                    if (ma == F(0)) continue;
                                    for (std::size_t bk = 0; bk < db; ++bk) {
                                        const F& mb = B.mult.at(b0, b2, bk);
                                        if (mb == F(0)) continue;
                                        r.mult.at(a1 * db + b1, a2 * db + b2, ak * db + bk) +=
                                            cb * ca * ma * mb;
                                    }
                                }
                            }
                        }
    return r;
}

// associativity and unit laws of a structure-tensor algebra
template <class F>
std::vector<std::string> check_algebra(const DenseAlgebra<F>& alg) {
    std::vector<std::string> failures;
    const std::size_t n = alg.dim;
    bool assoc = true, unital = true;
    for (std::size_t i = 0; i < n && assoc; ++i)
        for (std::size_t j = 0; j < n && assoc; ++j)
            for (std::size_t k = 0; k < n && assoc; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    F lhs(0), rhs(0);
                    for (std::size_t x = 0; x < n; ++x) {
                        lhs += alg.mult.at(i, j, x) * alg.mult.at(x, k, l);
                        rhs += alg.mult.at(j, k, x) * alg.mult.at(i, x, l);
                    }
                    if (!(lhs == rhs)) { assoc = false; break; }
                }
    for (std::size_t i = 0; i < n && unital; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            F left(0), right(0);
            for (std::size_t x = 0; x < n; ++x) {
                left += alg.unit[x] * alg.mult.at(x, i, k);
                right += alg.unit[x] * alg.mult.at(i, x, k);
            }
            F expect = i == k ? F(1) : F(0);
            if (!(left == expect) || !(right == expect)) { unital = false; break; }
        }
    if (!assoc) failures.push_back("associativity");
    if (!unital) failures.push_back("unit");
    return failures;
}

// ---- the instance zoo ----------------------------------------------------------

inline FinHopf<Rat> group_algebra_zn(std::size_t n) {
    FinHopf<Rat> h;
    h.dim = n;
    h.mult = Tensor3<Rat>(n, n, n);
    h.comult = Tensor3<Rat>(n, n, n);
    h.unit.assign(n, Rat(0));
    h.counit.assign(n, Rat(1));
    h.antipode.assign(n, std::vector<Rat>(n, Rat(0)));
    h.unit[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h.mult.at(i, j, (i + j) % n) = 1;
        h.comult.at(i, i, i) = 1;
        h.antipode[i][(n - i) % n] = 1;
    }
    return h;
}

// Sweedler's 4-dimensional Hopf algebra on the basis (1, g, x, gx):
// g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
inline FinHopf<Rat> sweedler_hopf() {
    FinHopf<Rat> h;
    h.dim = 4;
    h.mult = Tensor3<Rat>(4, 4, 4);
    h.comult = Tensor3<Rat>(4, 4, 4);
    h.unit = {1, 0, 0, 0};
    h.counit = {1, 1, 0, 0};
    h.antipode.assign(4, std::vector<Rat>(4, Rat(0)));
    enum { e1 = 0, eg = 1, ex = 2, egx = 3 };
    auto m = [&](int i, int j, int k, long c) { h.mult.at(i, j, k) = c; };
    for (int i = 0; i < 4; ++i) { m(e1, i, i, 1); if (i != e1) m(i, e1, i, 1); }
    m(eg, eg, e1, 1);
    m(eg, ex, egx, 1);
    m(eg, egx, ex, 1);
    m(ex, eg, egx, -1);
    m(egx, eg, ex, -1);
    // x x = x gx = gx x = gx gx = 0
    h.comult.at(e1, e1, e1) = 1;
    h.comult.at(eg, eg, eg) = 1;
    h.comult.at(ex, ex, e1) = 1;
    h.comult.at(ex, eg, ex) = 1;
    h.comult.at(egx, egx, eg) = 1;
    h.comult.at(egx, e1, egx) = 1;
    h.antipode[e1][e1] = 1;
    h.antipode[eg][eg] = 1;
    h.antipode[ex][egx] = -1; // S(x) = -gx
    h.antipode[egx][ex] = 1;  // S(gx) = x
    return h;
}

struct ZooEntry {
    std::string name;
    FinHopf<Rat> hopf;
};

inline std::vector<ZooEntry> instance_zoo() {
    std::vector<ZooEntry> zoo;
    for (std::size_t n : {2, 3, 4}) {
        zoo.push_back({"z" + std::to_string(n), group_algebra_zn(n)});
        zoo.push_back({"z" + std::to_string(n) + "_dual", dual_cop(group_algebra_zn(n))});
    }
    zoo.push_back({"sweedler", sweedler_hopf()});
    return zoo;
}

} // namespace qgw
