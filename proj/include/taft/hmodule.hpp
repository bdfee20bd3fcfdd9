#pragma once

/**
 * @file hmodule.hpp
 * @brief Matrix models of modules over the generalized Taft algebra H_{n,d}.
 *
 * H_{n,d} is generated by g, h with g^n = 1, h^d = 0, hg = q gh, where
 * q = w^m, m = n/d and w = exp(2*pi*i/n). The coproduct
 *   Delta(g) = g (x) g,   Delta(h) = 1 (x) h + h (x) g
 * and antipode S(g) = g^{n-1}, S(h) = -q^{-1} g^{n-1} h give tensor
 * products and duals. M(l, i) is the l-dimensional module with basis
 * v_0..v_{l-1}, g v_j = w^i q^{-j} v_j and h v_j = v_{j+1} (h v_{l-1} = 0).
 *
 * decompose() recovers the Krull-Schmidt multiset of any such module
 * exactly: split into g-eigenspaces with the projections
 * (1/n) sum_j w^{-ij} g^j, then repeatedly peel an h-chain of maximal
 * height modulo the chains already peeled.
 */

#include "cyc_matrix.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace taft {

struct TaftParams {
    int n = 2;
    int d = 2;

    TaftParams() = default;
    TaftParams(int n_, int d_) : n(n_), d(d_) {
        if (n < 2 || d < 2) throw std::invalid_argument("TaftParams: need n, d >= 2");
        if (n % d != 0) throw std::invalid_argument("TaftParams: d must divide n");
    }

    int m() const { return n / d; }
    int rank() const { return n * d; }
    int wrap(long long i) const {
        long long r = i % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }

    friend bool operator==(const TaftParams&, const TaftParams&) = default;
};

/// Label (l, i) of the indecomposable M(l, i); i kept in 0..n-1.
struct IndexPair {
    int l = 1;
    int i = 0;

    IndexPair() = default;
    IndexPair(const TaftParams& p, int l_, long long i_) : l(l_), i(p.wrap(i_)) {
        if (l < 1 || l > p.d) throw std::out_of_range("IndexPair: length l must lie in 1..d");
    }

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;

    std::string str() const { return "M(" + std::to_string(l) + "," + std::to_string(i) + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const IndexPair& x) { return os << x.str(); }

class HModule {
public:
    /// Validates g^n = 1, h^d = 0 and hg = q gh exactly.
    HModule(TaftParams params, CycMatrix g, CycMatrix h) : params_(params), g_(std::move(g)), h_(std::move(h)) {
        if (g_.order() != params_.n || h_.order() != params_.n)
            throw std::invalid_argument("HModule: matrix entries must live in Q(w) with w of order n");
        if (!g_.square() || !h_.square() || g_.rows() != h_.rows() || g_.rows() == 0)
            throw std::invalid_argument("HModule: g and h must be square of the same positive size");
        if (!relations_hold()) throw std::invalid_argument("HModule: relations g^n = 1, h^d = 0, hg = qgh violated");
    }

    const TaftParams& params() const { return params_; }
    std::size_t dim() const { return g_.rows(); }
    const CycMatrix& g() const { return g_; }
    const CycMatrix& h() const { return h_; }

    bool relations_hold() const { return relations_hold(params_, g_, h_); }

    static bool relations_hold(const TaftParams& p, const CycMatrix& g, const CycMatrix& h) {
        const CycNum q = CycNum::root_power(p.n, p.m());
        if (!g.pow(static_cast<unsigned>(p.n)).is_identity()) return false;
        if (!h.pow(static_cast<unsigned>(p.d)).is_zero()) return false;
        return (h * g - q * (g * h)).is_zero();
    }

private:
    TaftParams params_;
    CycMatrix g_;
    CycMatrix h_;
};

inline HModule build_module(const TaftParams& p, const IndexPair& idx) {
    if (idx.l < 1 || idx.l > p.d || idx.i < 0 || idx.i >= p.n) throw std::out_of_range("build_module: index out of range");
    const auto l = static_cast<std::size_t>(idx.l);
    CycMatrix g(p.n, l, l);
    CycMatrix h(p.n, l, l);
    for (std::size_t j = 0; j < l; ++j) {
        g(j, j) = CycNum::root_power(p.n, idx.i - static_cast<long long>(j) * p.m());
        if (j + 1 < l) h(j + 1, j) = CycNum::one(p.n);
    }
    return HModule(p, std::move(g), std::move(h));
}

inline HModule build_module(const TaftParams& p, int l, long long i) { return build_module(p, IndexPair(p, l, i)); }

/// A (x) B with g -> G_A (x) G_B and h -> I (x) H_B + H_A (x) G_B.
inline HModule tensor(const HModule& a, const HModule& b) {
    if (!(a.params() == b.params())) throw std::invalid_argument("tensor: parameter mismatch");
    const int n = a.params().n;
    CycMatrix g = CycMatrix::kron(a.g(), b.g());
    CycMatrix h = CycMatrix::kron(CycMatrix::identity(n, a.dim()), b.h()) + CycMatrix::kron(a.h(), b.g());
    return HModule(a.params(), std::move(g), std::move(h));
}

/// Dual module: x acts by the transpose of the matrix of S(x).
inline HModule dual(const HModule& a) {
    const TaftParams& p = a.params();
    const CycMatrix g_inv = a.g().pow(static_cast<unsigned>(p.n - 1));
    const CycNum minus_q_inv = -CycNum::root_power(p.n, -p.m());
    CycMatrix g = g_inv.transpose();
    CycMatrix h = (minus_q_inv * (g_inv * a.h())).transpose().canonical();
    return HModule(p, std::move(g), std::move(h));
}

inline HModule direct_sum(const HModule& a, const HModule& b) {
    if (!(a.params() == b.params())) throw std::invalid_argument("direct_sum: parameter mismatch");
    return HModule(a.params(), CycMatrix::direct_sum(a.g(), b.g()), CycMatrix::direct_sum(a.h(), b.h()));
}

/// Direct sum of the indecomposables in a (nonempty) list.
inline HModule direct_sum(const TaftParams& p, const std::vector<IndexPair>& summands) {
    if (summands.empty()) throw std::invalid_argument("direct_sum: empty summand list");
    CycMatrix g(p.n, 0, 0);
    CycMatrix h(p.n, 0, 0);
    for (const auto& s : summands) {
        const HModule m = build_module(p, s);
        g = CycMatrix::direct_sum(g, m.g());
        h = CycMatrix::direct_sum(h, m.h());
    }
    return HModule(p, std::move(g), std::move(h));
}

/// Krull-Schmidt multiset of a, sorted (l-major, then i).
inline std::vector<IndexPair> decompose(const HModule& a) {
    const TaftParams& p = a.params();
    const int n = p.n;
    const int m = p.m();
    const std::size_t dim = a.dim();

    // g-eigenspaces via exact eigenprojections
    std::vector<CycMatrix> g_powers;
    g_powers.reserve(static_cast<std::size_t>(n));
    g_powers.push_back(CycMatrix::identity(n, dim));
    for (int j = 1; j < n; ++j) g_powers.push_back((g_powers.back() * a.g()).canonical());

    // P_r = (1/n) sum_j w^{-rj} g^j, filled only where some g^j is nonzero
    std::vector<CycMatrix> proj(static_cast<std::size_t>(n), CycMatrix(n, dim, dim));
    const Rational inv_n(1, n);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col) {
            bool any = false;
            for (int j = 0; j < n && !any; ++j) any = !g_powers[j](row, col).is_structural_zero();
            if (!any) continue;
            for (int r = 0; r < n; ++r) {
                CycNum sum(n);
                for (int j = 0; j < n; ++j) {
                    const CycNum& x = g_powers[j](row, col);
                    if (!x.is_structural_zero()) sum += x.shifted(-static_cast<long long>(r) * j);
                }
                sum *= inv_n;
                sum.canonicalize();
                proj[r](row, col) = std::move(sum);
            }
        }

    std::vector<std::vector<CycVector>> eigenbasis(static_cast<std::size_t>(n));
    std::vector<CycVector> all_columns;
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < n; ++r) {
        eigenbasis[r] = column_space_basis(proj[r]);
        offset[r + 1] = offset[r] + eigenbasis[r].size();
        for (const auto& v : eigenbasis[r]) all_columns.push_back(v);
    }
    if (offset[n] != dim) throw std::invalid_argument("decompose: g is not diagonalizable with n-th root eigenvalues");

    // h in the eigenbasis
    const CycMatrix basis = CycMatrix::from_columns(n, dim, all_columns);
    const auto basis_inv = inverse(basis);
    if (!basis_inv) throw std::logic_error("decompose: eigenvectors are not independent");
    const CycMatrix h_eig = (*basis_inv * (a.h() * basis)).canonical();

    // block maps h_r : V_r -> V_{r-m}
    std::vector<CycMatrix> h_block(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        const int s = p.wrap(r - m);
        const std::size_t rows = offset[s + 1] - offset[s];
        const std::size_t cols = offset[r + 1] - offset[r];
        h_block[r] = CycMatrix(n, rows, cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t row = 0; row < dim; ++row) {
                const CycNum& x = h_eig(row, offset[r] + c);
                if (x.is_structural_zero()) continue;
                if (row < offset[s] || row >= offset[s + 1])
                    throw std::invalid_argument("decompose: h does not lower g-weights by q^{-1}");
                h_block[r](row - offset[s], c) = x;
            }
    }

    // peel chains of maximal height modulo what has been peeled
    std::vector<EchelonBasis> peeled;
    peeled.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) peeled.emplace_back(n, offset[r + 1] - offset[r]);

    auto height = [&](int r, const CycVector& v) {
        int t = 0;
        int weight = r;
        CycVector cur = v;
        while (!peeled[weight].contains(cur)) {
            ++t;
            if (t > p.d) throw std::invalid_argument("decompose: h is not nilpotent of order d");
            cur = h_block[weight] * cur;
            weight = p.wrap(weight - m);
        }
        return t;
    };

    std::vector<IndexPair> out;
    std::size_t covered = 0;
    while (covered < dim) {
        int best_height = 0;
        int best_weight = -1;
        CycVector best;
        for (int r = 0; r < n; ++r) {
            const std::size_t block_dim = offset[r + 1] - offset[r];
            for (std::size_t k = 0; k < block_dim; ++k) {
                CycVector e(block_dim, CycNum(n));
                e[k] = CycNum::one(n);
                const int t = height(r, e);
                if (t > best_height) {
                    best_height = t;
                    best_weight = r;
                    best = std::move(e);
                }
            }
        }
        if (best_height == 0) throw std::logic_error("decompose: no vector outside the peeled span");
        int weight = best_weight;
        CycVector cur = best;
        for (int t = 0; t < best_height; ++t) {
            if (!peeled[weight].insert(cur)) throw std::logic_error("decompose: peeled chain is dependent");
            cur = h_block[weight] * cur;
            weight = p.wrap(weight - m);
        }
        covered += static_cast<std::size_t>(best_height);
        out.emplace_back(p, best_height, best_weight);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace taft
