#pragma once

/**
 * @file spectrum.hpp
 * @brief Characters and finite-dimensional representations of the
 *        complexified Green algebra R(H_{n,d}) and of the projective class
 *        algebra P(H_{n,d}).
 *
 * The characters of R(H_{n,d}) are the solutions of
 *   y^n = 1,  (z - y^m - 1) F_d(y^m, z) = 0,
 * namely (w_k, 2) for d | k and (w_k, s_{k,j}) with
 * s_{k,j} = 2 sqrt(w_k^m) cos(j pi / d), 1 <= j <= d-1 (principal root).
 * There are nd - n + m of them. The remaining indecomposables are the
 * two-dimensional V(k), d does not divide k, where z acts as a Jordan
 * block at the double root 1 + w_k^m.
 */

#include "fibpoly.hpp"
#include "greenring.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace taft {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kDedupTolerance = 1e-9;
inline constexpr double kRelationTolerance = 1e-8;
inline constexpr double kClusterTolerance = 1e-7;

/// w_k = exp(2 pi i k / n), computed from the angle to keep |w_k| = 1 exact-ish.
inline Complex root_of_unity(int n, long long k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
}

struct SolutionPoint {
    Complex lambda;
    Complex mu;
    int k = 0;
    std::optional<int> j;  // absent for the (w_k, 2) family

    std::string label() const {
        std::ostringstream os;
        os << "(k=" << k << (j ? ",j=" + std::to_string(*j) : std::string(",two")) << ')';
        return os.str();
    }
};

inline std::vector<SolutionPoint> solve_system(const TaftParams& p) {
    const int n = p.n;
    const int d = p.d;
    const int m = p.m();
    std::vector<SolutionPoint> candidates;
    for (int k = 0; k < n; ++k) {
        const Complex lambda = root_of_unity(n, k);
        if (k % d == 0) candidates.push_back({lambda, Complex{2.0, 0.0}, k, std::nullopt});
        const auto roots = fib_roots(root_of_unity(n, static_cast<long long>(k) * m), d);
        for (int j = 1; j < d; ++j) candidates.push_back({lambda, roots[j - 1], k, j});
    }
    std::vector<SolutionPoint> out;
    for (const auto& c : candidates) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const SolutionPoint& s) {
            return std::hypot(std::abs(s.lambda - c.lambda), std::abs(s.mu - c.mu)) <= kDedupTolerance;
        });
        if (!seen) out.push_back(c);
    }
    return out;
}

/// Value of a canonical polynomial at (y, z) = (lambda, mu).
inline Complex evaluate(const QuotientPoly& poly, Complex lambda, Complex mu) {
    std::vector<Complex> mu_pow(static_cast<std::size_t>(poly.z_dim()), Complex{1.0, 0.0});
    for (std::size_t j = 1; j < mu_pow.size(); ++j) mu_pow[j] = mu_pow[j - 1] * mu;
    Complex sum{0.0, 0.0};
    Complex lambda_pow{1.0, 0.0};
    for (int i = 0; i < poly.y_dim(); ++i) {
        for (int j = 0; j < poly.z_dim(); ++j) {
            const auto c = poly.coeff(i, j);
            if (c != 0) sum += static_cast<double>(c) * lambda_pow * mu_pow[j];
        }
        lambda_pow *= lambda;
    }
    return sum;
}

/// Character value of a Green ring element at a solution point.
inline Complex evaluate(const GreenElement& a, const SolutionPoint& pt) { return evaluate(to_poly(a), pt.lambda, pt.mu); }

/// Numeric nilpotency test: every character vanishes within tol.
inline bool vanishes_on_spectrum(const GreenElement& a, const std::vector<SolutionPoint>& spectrum,
                                 double tol = kRelationTolerance) {
    const QuotientPoly poly = to_poly(a);
    return std::all_of(spectrum.begin(), spectrum.end(),
                       [&](const SolutionPoint& pt) { return std::abs(evaluate(poly, pt.lambda, pt.mu)) <= tol; });
}

// ---------------------------------------------------------------------------
// Matrix relations

inline CMatrix matrix_power(const CMatrix& a, int e) {
    CMatrix result = CMatrix::Identity(a.rows(), a.cols());
    CMatrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// F_s(A, Z) for commuting A, Z.
inline CMatrix fib_matrix(const CMatrix& a, const CMatrix& z, int s) {
    const auto size = z.rows();
    CMatrix prev = CMatrix::Zero(size, size);
    CMatrix cur = CMatrix::Identity(size, size);
    if (s == 0) return prev;
    for (int k = 1; k < s; ++k) {
        CMatrix next = z * cur - a * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct RelationResidual {
    double commutator = 0.0;  // ||YZ - ZY||
    double cyclic = 0.0;      // ||Y^n - I||
    double ideal = 0.0;       // ||(Z - Y^m - I) F_d(Y^m, Z)||

    double max() const { return std::max({commutator, cyclic, ideal}); }
};

/// Frobenius-norm residuals of the Green algebra relations on (Y, Z).
inline RelationResidual green_relation_residual(const TaftParams& p, const CMatrix& y, const CMatrix& z) {
    const auto size = y.rows();
    const CMatrix id = CMatrix::Identity(size, size);
    const CMatrix y_m = matrix_power(y, p.m());
    RelationResidual r;
    r.commutator = (y * z - z * y).norm();
    r.cyclic = (matrix_power(y, p.n) - id).norm();
    r.ideal = ((z - y_m - id) * fib_matrix(y_m, z, p.d)).norm();
    return r;
}

/// Residuals of y^n = 1, z^2 = (1 + y^m + ... + y^{(d-1)m}) z.
inline RelationResidual projective_relation_residual(const TaftParams& p, const CMatrix& y, const CMatrix& z) {
    const auto size = y.rows();
    const CMatrix id = CMatrix::Identity(size, size);
    const CMatrix y_m = matrix_power(y, p.m());
    CMatrix geometric = CMatrix::Zero(size, size);
    CMatrix term = id;
    for (int i = 0; i < p.d; ++i) {
        geometric += term;
        term = term * y_m;
    }
    RelationResidual r;
    r.commutator = (y * z - z * y).norm();
    r.cyclic = (matrix_power(y, p.n) - id).norm();
    r.ideal = (z * z - geometric * z).norm();
    return r;
}

// ---------------------------------------------------------------------------
// Representations of R(H_{n,d})

struct RModuleClass {
    enum class Kind { one_dim, two_dim };

    Kind kind = Kind::one_dim;
    int k = 0;
    std::optional<SolutionPoint> point;  // one_dim only
    CMatrix y;
    CMatrix z;

    /// (kind, k, j) with j = 0 for the (w_k, 2) character and for two_dim.
    std::tuple<int, int, int> key() const {
        return {kind == Kind::one_dim ? 0 : 1, k, point && point->j ? *point->j : 0};
    }

    std::string label() const {
        if (kind == Kind::two_dim) return "V(" + std::to_string(k) + ")";
        return "C" + point->label();
    }

    friend bool operator<(const RModuleClass& a, const RModuleClass& b) { return a.key() < b.key(); }
    friend bool operator==(const RModuleClass& a, const RModuleClass& b) { return a.key() == b.key(); }
};

inline RModuleClass one_dim_class(const SolutionPoint& pt) {
    RModuleClass c;
    c.kind = RModuleClass::Kind::one_dim;
    c.k = pt.k;
    c.point = pt;
    c.y = CMatrix::Constant(1, 1, pt.lambda);
    c.z = CMatrix::Constant(1, 1, pt.mu);
    return c;
}

inline RModuleClass two_dim_class(const TaftParams& p, int k) {
    if (k < 0 || k >= p.n || k % p.d == 0) throw std::invalid_argument("two_dim_class: need 0 <= k < n with d not dividing k");
    const Complex w = root_of_unity(p.n, k);
    const Complex root = 1.0 + root_of_unity(p.n, static_cast<long long>(k) * p.m());
    RModuleClass c;
    c.kind = RModuleClass::Kind::two_dim;
    c.k = k;
    c.y = w * CMatrix::Identity(2, 2);
    c.z = CMatrix::Zero(2, 2);
    c.z(0, 0) = root;
    c.z(0, 1) = 1.0;
    c.z(1, 1) = root;
    return c;
}

inline std::vector<RModuleClass> irreducibles(const TaftParams& p) {
    std::vector<RModuleClass> out;
    for (const auto& pt : solve_system(p)) out.push_back(one_dim_class(pt));
    return out;
}

inline std::vector<RModuleClass> two_dim_indecomposables(const TaftParams& p) {
    std::vector<RModuleClass> out;
    for (int k = 0; k < p.n; ++k)
        if (k % p.d != 0) out.push_back(two_dim_class(p, k));
    return out;
}

namespace detail {

inline int numeric_nullity(const CMatrix& a, double tol) {
    if (a.cols() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index t = 0; t < sv.size(); ++t)
        if (sv(t) > tol) ++rank;
    return static_cast<int>(a.cols()) - rank;
}

/// dim of { v : (Y - lambda) v = 0, (Z - mu)^t v = 0 }.
inline int joint_kernel_dim(const CMatrix& y, const CMatrix& z, Complex lambda, Complex mu, int t) {
    const auto size = y.rows();
    const CMatrix id = CMatrix::Identity(size, size);
    CMatrix stacked(2 * size, size);
    stacked.topRows(size) = y - lambda * id;
    stacked.bottomRows(size) = matrix_power(z - mu * id, t);
    return numeric_nullity(stacked, kClusterTolerance);
}

}  // namespace detail

/// Decomposes the R(H_{n,d})-module on which y, z act by Y, Z into the
/// classes above. Works over the finite character inventory: for each
/// character (lambda, mu) the joint kernels of (Y - lambda, (Z - mu)^t),
/// t = 1, 2, 3, give the Jordan structure of Z on that generalized
/// eigenspace.
inline std::vector<RModuleClass> classify_R_module(const TaftParams& p, const CMatrix& y, const CMatrix& z) {
    if (y.rows() != y.cols() || z.rows() != z.cols() || y.rows() != z.rows() || y.rows() == 0)
        throw std::invalid_argument("classify_R_module: Y and Z must be square of equal positive size");
    const RelationResidual res = green_relation_residual(p, y, z);
    if (res.commutator > kRelationTolerance) throw std::invalid_argument("classify_R_module: Y and Z do not commute");
    if (res.cyclic > kRelationTolerance || res.ideal > kRelationTolerance)
        throw std::invalid_argument("classify_R_module: relations y^n = 1, (z - y^m - 1) F_d(y^m, z) = 0 violated");

    std::vector<RModuleClass> out;
    int accounted = 0;
    for (const auto& pt : solve_system(p)) {
        const int k1 = detail::joint_kernel_dim(y, z, pt.lambda, pt.mu, 1);
        if (k1 == 0) continue;
        const int k2 = detail::joint_kernel_dim(y, z, pt.lambda, pt.mu, 2);
        const int k3 = detail::joint_kernel_dim(y, z, pt.lambda, pt.mu, 3);
        if (k3 != k2) throw std::invalid_argument("classify_R_module: inconsistent input (Jordan block of size >= 3)");
        const int blocks2 = k2 - k1;
        const int blocks1 = k1 - blocks2;
        if (blocks2 > 0) {
            const Complex double_root = 1.0 + std::pow(pt.lambda, p.m());
            if (pt.k % p.d == 0 || std::abs(pt.mu - double_root) > kClusterTolerance)
                throw std::invalid_argument("classify_R_module: inconsistent input (Jordan block at a simple root)");
        }
        for (int t = 0; t < blocks1; ++t) out.push_back(one_dim_class(pt));
        for (int t = 0; t < blocks2; ++t) out.push_back(two_dim_class(p, pt.k));
        accounted += k2;
    }
    if (accounted != static_cast<int>(y.rows()))
        throw std::invalid_argument("classify_R_module: inconsistent input (eigenvalues outside the solution set)");
    std::sort(out.begin(), out.end());
    return out;
}

/// Block-diagonal realization of a list of classes.
inline std::pair<CMatrix, CMatrix> direct_sum(const std::vector<RModuleClass>& classes) {
    Eigen::Index size = 0;
    for (const auto& c : classes) size += c.y.rows();
    CMatrix y = CMatrix::Zero(size, size);
    CMatrix z = CMatrix::Zero(size, size);
    Eigen::Index at = 0;
    for (const auto& c : classes) {
        const auto s = c.y.rows();
        y.block(at, at, s, s) = c.y;
        z.block(at, at, s, s) = c.z;
        at += s;
    }
    return {y, z};
}

struct BlockCensus {
    int total = 0;
    int dim1_blocks = 0;
    int dim2_blocks = 0;
    bool consistent = false;
};

/// (nd, nd - 2(n - m), n - m), cross-checked against the enumerations:
/// each 2-dimensional block holds V(k) and its simple quotient.
inline BlockCensus block_census(const TaftParams& p) {
    const int n = p.n;
    const int m = p.m();
    BlockCensus c;
    c.total = n * p.d;
    c.dim1_blocks = n * p.d - 2 * (n - m);
    c.dim2_blocks = n - m;
    const int simple = static_cast<int>(irreducibles(p).size());
    const int two_dim = static_cast<int>(two_dim_indecomposables(p).size());
    c.consistent = simple + two_dim == c.total && two_dim == c.dim2_blocks && simple - two_dim == c.dim1_blocks;
    return c;
}

// ---------------------------------------------------------------------------
// Projective class algebra and stable Green ring

struct ProjectiveRep {
    enum class Kind { simple_zero, simple_d, two_dim };

    Kind kind = Kind::simple_zero;
    int k = 0;
    CMatrix y;
    CMatrix z;

    std::string label() const {
        switch (kind) {
            case Kind::simple_zero: return "C_" + std::to_string(k);
            case Kind::simple_d: return "C_" + std::to_string(k) + ",d";
            case Kind::two_dim: return "V_" + std::to_string(k);
        }
        return "?";
    }
};

struct ProjectiveReps {
    std::vector<ProjectiveRep> one_dim;
    std::vector<ProjectiveRep> two_dim;
};

inline ProjectiveReps projective_algebra_reps(const TaftParams& p) {
    ProjectiveReps out;
    for (int k = 0; k < p.n; ++k) {
        const Complex w = root_of_unity(p.n, k);
        out.one_dim.push_back({ProjectiveRep::Kind::simple_zero, k, CMatrix::Constant(1, 1, w), CMatrix::Zero(1, 1)});
        if (k % p.d == 0)
            out.one_dim.push_back({ProjectiveRep::Kind::simple_d, k, CMatrix::Constant(1, 1, w),
                                   CMatrix::Constant(1, 1, Complex(p.d, 0.0))});
    }
    for (int k = 0; k < p.n; ++k) {
        if (k % p.d == 0) continue;
        CMatrix z = CMatrix::Zero(2, 2);
        z(0, 1) = 1.0;
        out.two_dim.push_back({ProjectiveRep::Kind::two_dim, k, root_of_unity(p.n, k) * CMatrix::Identity(2, 2), z});
    }
    return out;
}

/// Evaluation matrix of the 2n canonical projective monomials at the n + m
/// characters of P(H_{n,d}); its kernel is the nilradical.
inline CMatrix projective_character_matrix(const TaftParams& p) {
    const auto reps = projective_algebra_reps(p);
    CMatrix out(static_cast<Eigen::Index>(reps.one_dim.size()), 2 * p.n);
    for (std::size_t r = 0; r < reps.one_dim.size(); ++r) {
        const Complex lambda = reps.one_dim[r].y(0, 0);
        const Complex mu = reps.one_dim[r].z(0, 0);
        for (int i = 0; i < p.n; ++i) {
            const Complex lp = std::pow(lambda, i);
            out(static_cast<Eigen::Index>(r), 2 * i) = lp;
            out(static_cast<Eigen::Index>(r), 2 * i + 1) = lp * mu;
        }
    }
    return out;
}

/// Canonical projective coordinates in the column order of projective_character_matrix.
inline Eigen::VectorXcd projective_coordinates(const QuotientPoly& poly) {
    Eigen::VectorXcd v(2 * poly.y_dim());
    for (int i = 0; i < poly.y_dim(); ++i) {
        v(2 * i) = static_cast<double>(poly.coeff(i, 0));
        v(2 * i + 1) = static_cast<double>(poly.coeff(i, 1));
    }
    return v;
}

struct StableRankReport {
    int characters = 0;
    int monomials = 0;
    int rank = 0;
    double min_scaled_singular_value = 0.0;
    bool full_rank = false;
};

/// Evaluation of the n(d-1) stable monomials y^i z^j (j <= d-2) at the
/// n(d-1) characters (w_k, s_{k,j}); rows scaled to unit 2-norm.
inline StableRankReport stable_rank_report(const TaftParams& p) {
    const int n = p.n;
    const int zdim = p.d - 1;
    std::vector<Complex> lambdas;
    std::vector<Complex> mus;
    for (int k = 0; k < n; ++k) {
        const auto roots = fib_roots(root_of_unity(n, static_cast<long long>(k) * p.m()), p.d);
        for (const auto& r : roots) {
            lambdas.push_back(root_of_unity(n, k));
            mus.push_back(r);
        }
    }
    const auto rows = static_cast<Eigen::Index>(lambdas.size());
    CMatrix eval(rows, n * zdim);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < zdim; ++j) eval(r, i * zdim + j) = std::pow(lambdas[r], i) * std::pow(mus[r], j);
        eval.row(r) /= eval.row(r).norm();
    }
    Eigen::JacobiSVD<CMatrix> svd(eval);
    const auto& sv = svd.singularValues();
    StableRankReport report;
    report.characters = static_cast<int>(rows);
    report.monomials = n * zdim;
    report.min_scaled_singular_value = sv.size() ? sv(sv.size() - 1) : 0.0;
    for (Eigen::Index t = 0; t < sv.size(); ++t)
        if (sv(t) > kRelationTolerance) ++report.rank;
    report.full_rank = report.characters == report.monomials && report.rank == report.monomials &&
                       report.min_scaled_singular_value > kRelationTolerance;
    return report;
}

inline bool stable_semiprimitivity_check(const TaftParams& p) { return stable_rank_report(p).full_rank; }

}  // namespace taft
