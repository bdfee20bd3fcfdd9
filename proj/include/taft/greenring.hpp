#pragma once

/**
 * @file greenring.hpp
 * @brief The Green ring r(H_{n,d}) on the basis {[M(l,i)]} and its
 *        polynomial presentation.
 *
 * With y = [M(1,-1)] and z = [M(2,0)]:
 *
 *   r(H_{n,d}) = Z[y,z] / (y^n - 1, (z - y^m - 1) F_d(y^m, z)),
 *   [M(l,i)]  <->  y^{(n-i) mod n} F_l(y^m, z).
 *
 * Two related quotients share the machinery:
 *   projective class ring  Z[y,z] / (y^n - 1, z^2 - (1 + y^m + ... + y^{(d-1)m}) z),  z = [M(d,0)]
 *   stable Green ring       Z[y,z] / (y^n - 1, F_d(y^m, z))
 *
 * Every relation is monic in z, so canonical forms are integer arrays
 * indexed by (y-exponent < n, z-exponent < D).
 */

#include "checked.hpp"
#include "fibpoly.hpp"
#include "hmodule.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace taft {

enum class IdealKind { green, projective, stable };

inline const char* to_string(IdealKind kind) {
    switch (kind) {
        case IdealKind::green: return "green";
        case IdealKind::projective: return "projective";
        case IdealKind::stable: return "stable";
    }
    return "?";
}

/// Number of z-powers in the canonical basis of each quotient.
inline int z_bound(const TaftParams& p, IdealKind kind) {
    switch (kind) {
        case IdealKind::green: return p.d;
        case IdealKind::projective: return 2;
        case IdealKind::stable: return p.d - 1;
    }
    throw std::invalid_argument("z_bound: unknown ideal kind");
}

/// Element of Z[y,z]/I in canonical form.
class QuotientPoly {
public:
    QuotientPoly(TaftParams params, IdealKind kind)
        : params_(params), kind_(kind), zdim_(z_bound(params, kind)),
          coeffs_(static_cast<std::size_t>(params.n * zdim_), 0) {}

    const TaftParams& params() const { return params_; }
    IdealKind kind() const { return kind_; }
    int y_dim() const { return params_.n; }
    int z_dim() const { return zdim_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t coeff(int y_exp, int z_exp) const { return coeffs_[index(y_exp, z_exp)]; }
    void set_coeff(int y_exp, int z_exp, std::int64_t c) { coeffs_[index(y_exp, z_exp)] = c; }
    void add_coeff(int y_exp, int z_exp, std::int64_t c) {
        auto& slot = coeffs_[index(y_exp, z_exp)];
        slot = checked_add(slot, c);
    }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const QuotientPoly& a, const QuotientPoly& b) {
        return a.params_ == b.params_ && a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_;
    }

    QuotientPoly& operator+=(const QuotientPoly& b) {
        check_same(b);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], b.coeffs_[k]);
        return *this;
    }

    QuotientPoly& operator-=(const QuotientPoly& b) {
        check_same(b);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_sub(coeffs_[k], b.coeffs_[k]);
        return *this;
    }

    friend QuotientPoly operator+(QuotientPoly a, const QuotientPoly& b) { return a += b; }
    friend QuotientPoly operator-(QuotientPoly a, const QuotientPoly& b) { return a -= b; }

    friend QuotientPoly operator*(std::int64_t s, QuotientPoly a) {
        for (auto& c : a.coeffs_) c = checked_mul(s, c);
        return a;
    }

    BivarPoly to_bivar() const {
        BivarPoly out;
        for (int i = 0; i < params_.n; ++i)
            for (int j = 0; j < zdim_; ++j)
                if (coeff(i, j) != 0) out += BivarPoly::monomial(Integer(static_cast<long>(coeff(i, j))), i, j);
        return out;
    }

    std::string str() const { return to_bivar().str(); }

private:
    std::size_t index(int y_exp, int z_exp) const {
        if (y_exp < 0 || y_exp >= params_.n || z_exp < 0 || z_exp >= zdim_)
            throw std::out_of_range("QuotientPoly: exponent out of canonical range");
        return static_cast<std::size_t>(y_exp * zdim_ + z_exp);
    }

    void check_same(const QuotientPoly& b) const {
        if (!(params_ == b.params_) || kind_ != b.kind_) throw std::invalid_argument("QuotientPoly: ring mismatch");
    }

    TaftParams params_;
    IdealKind kind_;
    int zdim_;
    std::vector<std::int64_t> coeffs_;
};

/// Integer combination of basis classes [M(l,i)]. Negative coefficients
/// denote virtual modules.
class GreenElement {
public:
    using Coeffs = std::map<IndexPair, std::int64_t>;

    explicit GreenElement(TaftParams params) : params_(params) {}

    static GreenElement basis(const TaftParams& p, int l, long long i, std::int64_t c = 1) {
        GreenElement out(p);
        out.add(IndexPair(p, l, i), c);
        return out;
    }

    static GreenElement unit(const TaftParams& p) { return basis(p, 1, 0); }

    const TaftParams& params() const { return params_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t coeff(const IndexPair& idx) const {
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(const IndexPair& idx, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(idx, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool is_module() const {
        for (const auto& [idx, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    std::int64_t dimension() const {
        std::int64_t total = 0;
        for (const auto& [idx, c] : coeffs_) total = checked_add(total, checked_mul(c, idx.l));
        return total;
    }

    GreenElement& operator+=(const GreenElement& b) {
        check_same(b);
        for (const auto& [idx, c] : b.coeffs_) add(idx, c);
        return *this;
    }

    GreenElement& operator-=(const GreenElement& b) {
        check_same(b);
        for (const auto& [idx, c] : b.coeffs_) add(idx, checked_mul(-1, c));
        return *this;
    }

    friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
    friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }

    friend GreenElement operator*(std::int64_t s, const GreenElement& a) {
        GreenElement out(a.params_);
        for (const auto& [idx, c] : a.coeffs_) out.add(idx, checked_mul(s, c));
        return out;
    }

    friend bool operator==(const GreenElement& a, const GreenElement& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }

    /// e.g. "M(2,0) + M(2,2)", "2*M(1,0) - M(2,3)", "0".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, c0] : coeffs_) {
            std::int64_t c = c0;
            if (c < 0) {
                os << (first ? "-" : " - ");
                c = -c;
            } else if (!first) {
                os << " + ";
            }
            first = false;
            if (c != 1) os << c << '*';
            os << idx.str();
        }
        return os.str();
    }

private:
    void check_same(const GreenElement& b) const {
        if (!(params_ == b.params_)) throw std::invalid_argument("GreenElement: parameter mismatch");
    }

    TaftParams params_;
    Coeffs coeffs_;
};

enum class MultiplyPath { poly, oracle };

/// The three presentations for fixed (n, d), with their reduction rules
/// and the basis-change maps. recurrence_sign = -1 is the real Green
/// ring; +1 flips the sign in F_{s+2} = z F_{s+1} - y F_s and exists so
/// self-checks can demonstrate that a corrupted rule is caught.
class GreenPresentation {
public:
    explicit GreenPresentation(TaftParams params, int recurrence_sign = -1)
        : params_(params), sign_(recurrence_sign) {
        if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("GreenPresentation: recurrence sign must be +-1");
        const int m = params_.m();
        for (int s = 0; s <= params_.d; ++s) fib_.push_back(detail::fib_poly_signed(s, sign_).substitute_y_power(m));
        const BivarPoly y_m = BivarPoly::monomial(1, m, 0);
        relations_[0] = (BivarPoly::z() - y_m - BivarPoly::constant(1)) * fib_[params_.d];
        BivarPoly geometric;
        for (int i = 0; i < params_.d; ++i) geometric += BivarPoly::monomial(1, i * m, 0);
        relations_[1] = BivarPoly::z() * BivarPoly::z() - geometric * BivarPoly::z();
        relations_[2] = fib_[params_.d];
        for (int k = 0; k < 3; ++k) build_rule(static_cast<IdealKind>(k));
    }

    const TaftParams& params() const { return params_; }
    int recurrence_sign() const { return sign_; }

    /// F_s(y^m, z) as a plain polynomial, 0 <= s <= d.
    const BivarPoly& fib_in_y_power(int s) const { return fib_.at(static_cast<std::size_t>(s)); }

    /// The z-monic generator of the ideal besides y^n - 1.
    const BivarPoly& relation(IdealKind kind) const { return relations_[static_cast<int>(kind)]; }

    QuotientPoly reduce(const BivarPoly& poly, IdealKind kind) const {
        const int n = params_.n;
        const int zdim = z_bound(params_, kind);
        int top = std::max(poly.z_degree() + 1, zdim);
        std::vector<std::int64_t> work(static_cast<std::size_t>(n * top), 0);
        for (const auto& [e, c] : poly.terms()) {
            if (e.first < 0 || e.second < 0) throw std::invalid_argument("reduce: negative exponent");
            if (!c.fits_slong_p()) throw std::overflow_error("reduce: coefficient exceeds 64 bits");
            auto& slot = work[static_cast<std::size_t>(params_.wrap(e.first) * top + e.second)];
            slot = checked_add(slot, c.get_si());
        }
        reduce_dense(work, top, kind);
        QuotientPoly out(params_, kind);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < zdim; ++j) out.set_coeff(i, j, work[static_cast<std::size_t>(i * top + j)]);
        return out;
    }

    QuotientPoly reduce(const QuotientPoly& p) const { return reduce(p.to_bivar(), p.kind()); }

    QuotientPoly multiply(const QuotientPoly& a, const QuotientPoly& b) const {
        if (!(a.params() == params_) || !(b.params() == params_) || a.kind() != b.kind())
            throw std::invalid_argument("multiply: ring mismatch");
        const int n = params_.n;
        const int zdim = a.z_dim();
        const int top = 2 * zdim - 1;
        std::vector<std::int64_t> work(static_cast<std::size_t>(n * top), 0);
        for (int i1 = 0; i1 < n; ++i1)
            for (int j1 = 0; j1 < zdim; ++j1) {
                const std::int64_t c1 = a.coeff(i1, j1);
                if (c1 == 0) continue;
                for (int i2 = 0; i2 < n; ++i2)
                    for (int j2 = 0; j2 < zdim; ++j2) {
                        const std::int64_t c2 = b.coeff(i2, j2);
                        if (c2 == 0) continue;
                        auto& slot = work[static_cast<std::size_t>(((i1 + i2) % n) * top + j1 + j2)];
                        slot = checked_add(slot, checked_mul(c1, c2));
                    }
            }
        reduce_dense(work, top, a.kind());
        QuotientPoly out(params_, a.kind());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < zdim; ++j) out.set_coeff(i, j, work[static_cast<std::size_t>(i * top + j)]);
        return out;
    }

    /// [M(l,i)] -> y^{(n-i) mod n} F_l(y^m, z).
    QuotientPoly basis_to_poly(const IndexPair& idx) const {
        check_index(idx);
        return reduce(BivarPoly::monomial(1, params_.wrap(params_.n - idx.i), 0) * fib_[idx.l], IdealKind::green);
    }

    QuotientPoly to_poly(const GreenElement& a) const {
        check_params(a.params());
        QuotientPoly out(params_, IdealKind::green);
        for (const auto& [idx, c] : a.coeffs()) out += c * basis_to_poly(idx);
        return out;
    }

    /// Inverts the triangular basis change, top z-degree first.
    GreenElement poly_to_basis(const QuotientPoly& poly) const {
        if (poly.kind() != IdealKind::green) throw std::invalid_argument("poly_to_basis: expects a green-kind polynomial");
        check_params(poly.params());
        const int n = params_.n;
        QuotientPoly rest = poly;
        GreenElement out(params_);
        for (int j = params_.d - 1; j >= 0; --j)
            for (int a = 0; a < n; ++a) {
                const std::int64_t c = rest.coeff(a, j);
                if (c == 0) continue;
                const IndexPair idx(params_, j + 1, n - a);
                out.add(idx, c);
                rest -= c * basis_to_poly(idx);
            }
        if (!rest.is_zero()) throw std::logic_error("poly_to_basis: residue after triangular inversion");
        return out;
    }

    GreenElement multiply(const GreenElement& a, const GreenElement& b, MultiplyPath path = MultiplyPath::poly) const {
        check_params(a.params());
        check_params(b.params());
        if (path == MultiplyPath::poly) return poly_to_basis(multiply(to_poly(a), to_poly(b)));
        if (!a.is_module() || !b.is_module())
            throw std::invalid_argument("multiply: oracle path needs non-negative coefficients (actual modules)");
        GreenElement out(params_);
        for (const auto& [ia, ca] : a.coeffs())
            for (const auto& [ib, cb] : b.coeffs()) {
                const std::int64_t c = checked_mul(ca, cb);
                for (const auto& part : decompose(tensor(build_module(params_, ia), build_module(params_, ib))))
                    out.add(part, c);
            }
        return out;
    }

    /// Ring automorphism y -> y^{n-1}, z -> y^{n-m} z (the duality involution).
    GreenElement star(const GreenElement& a) const {
        const QuotientPoly p = to_poly(a);
        const int n = params_.n;
        const int m = params_.m();
        QuotientPoly out(params_, IdealKind::green);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < params_.d; ++j)
                if (p.coeff(i, j) != 0)
                    out.add_coeff(params_.wrap(static_cast<long long>(i) * (n - 1) + static_cast<long long>(j) * (n - m)), j,
                                  p.coeff(i, j));
        return poly_to_basis(out);
    }

    /// Image in the projective class ring; only simple and projective classes allowed.
    QuotientPoly to_projective(const GreenElement& a) const {
        check_params(a.params());
        QuotientPoly out(params_, IdealKind::projective);
        for (const auto& [idx, c] : a.coeffs()) {
            const int y_exp = params_.wrap(params_.n - idx.i);
            if (idx.l == params_.d) {
                out.add_coeff(y_exp, 1, c);
            } else if (idx.l == 1) {
                out.add_coeff(y_exp, 0, c);
            } else {
                throw std::invalid_argument("to_projective: " + idx.str() + " is neither simple nor projective");
            }
        }
        return out;
    }

    GreenElement from_projective(const QuotientPoly& poly) const {
        if (poly.kind() != IdealKind::projective) throw std::invalid_argument("from_projective: expects projective kind");
        check_params(poly.params());
        GreenElement out(params_);
        for (int i = 0; i < params_.n; ++i) {
            out.add(IndexPair(params_, 1, params_.n - i), poly.coeff(i, 0));
            out.add(IndexPair(params_, params_.d, params_.n - i), poly.coeff(i, 1));
        }
        return out;
    }

    /// Image in the stable Green ring (projective classes map to zero).
    QuotientPoly to_stable(const GreenElement& a) const { return reduce(to_poly(a).to_bivar(), IdealKind::stable); }

private:
    struct RuleTerm {
        int y_exp;
        int z_exp;
        std::int64_t coeff;
    };

    void build_rule(IdealKind kind) {
        const BivarPoly& rel = relations_[static_cast<int>(kind)];
        const int zdim = z_bound(params_, kind);
        if (rel.z_degree() != zdim || !rel.monic_in_z())
            throw std::logic_error("GreenPresentation: relation must be monic in z of the canonical degree");
        // z^D = -(rel - z^D)
        std::map<std::pair<int, int>, std::int64_t> folded;
        for (const auto& [e, c] : rel.terms()) {
            if (e.second == zdim) continue;
            folded[{params_.wrap(e.first), e.second}] -= c.get_si();
        }
        auto& rule = rules_[static_cast<int>(kind)];
        for (const auto& [e, c] : folded)
            if (c != 0) rule.push_back({e.first, e.second, c});
    }

    void reduce_dense(std::vector<std::int64_t>& work, int top, IdealKind kind) const {
        const int n = params_.n;
        const int zdim = z_bound(params_, kind);
        const auto& rule = rules_[static_cast<int>(kind)];
        for (int b = top - 1; b >= zdim; --b)
            for (int a = 0; a < n; ++a) {
                auto& slot = work[static_cast<std::size_t>(a * top + b)];
                const std::int64_t c = slot;
                if (c == 0) continue;
                slot = 0;
                for (const auto& t : rule) {
                    auto& dst = work[static_cast<std::size_t>(((a + t.y_exp) % n) * top + (b - zdim + t.z_exp))];
                    dst = checked_add(dst, checked_mul(c, t.coeff));
                }
            }
    }

    void check_params(const TaftParams& p) const {
        if (!(p == params_)) throw std::invalid_argument("GreenPresentation: parameter mismatch");
    }

    void check_index(const IndexPair& idx) const {
        if (idx.l < 1 || idx.l > params_.d || idx.i < 0 || idx.i >= params_.n)
            throw std::out_of_range("basis index out of range");
    }

    TaftParams params_;
    int sign_;
    std::vector<BivarPoly> fib_;
    BivarPoly relations_[3];
    std::vector<RuleTerm> rules_[3];
};

/// Shared standard presentation for (n, d); built once, read-only afterwards.
inline const GreenPresentation& presentation(const TaftParams& p) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<GreenPresentation>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{p.n, p.d}];
    if (!slot) slot = std::make_unique<GreenPresentation>(p);
    return *slot;
}

inline QuotientPoly basis_to_poly(const TaftParams& p, const IndexPair& idx) { return presentation(p).basis_to_poly(idx); }

inline QuotientPoly to_poly(const GreenElement& a) { return presentation(a.params()).to_poly(a); }

inline GreenElement poly_to_basis(const QuotientPoly& poly) { return presentation(poly.params()).poly_to_basis(poly); }

inline QuotientPoly reduce(const TaftParams& p, const BivarPoly& poly, IdealKind kind) {
    return presentation(p).reduce(poly, kind);
}

inline QuotientPoly reduce(const QuotientPoly& poly) { return presentation(poly.params()).reduce(poly); }

inline QuotientPoly multiply(const QuotientPoly& a, const QuotientPoly& b) { return presentation(a.params()).multiply(a, b); }

inline GreenElement multiply(const GreenElement& a, const GreenElement& b, MultiplyPath path = MultiplyPath::poly) {
    return presentation(a.params()).multiply(a, b, path);
}

inline GreenElement star(const GreenElement& a) { return presentation(a.params()).star(a); }

/// Z-basis [M(d, im+j)] - [M(d, (i-1)m+j)], 1 <= i <= d-1, 0 <= j <= m-1 (i outer).
inline std::vector<GreenElement> radical_basis(const TaftParams& p) {
    const int m = p.m();
    std::vector<GreenElement> out;
    for (int i = 1; i < p.d; ++i)
        for (int j = 0; j < m; ++j)
            out.push_back(GreenElement::basis(p, p.d, i * m + j) - GreenElement::basis(p, p.d, (i - 1) * m + j));
    return out;
}

/// x^2 = 0; the nilradical squares to zero, so this decides nilpotency.
inline bool is_nilpotent(const GreenElement& a) { return multiply(a, a).is_zero(); }

/// Exact membership in the span of radical_basis: only projective classes,
/// and coefficients summing to zero on each residue class mod m.
inline bool in_radical_span(const GreenElement& a) {
    const TaftParams& p = a.params();
    std::vector<std::int64_t> residue_sum(static_cast<std::size_t>(p.m()), 0);
    for (const auto& [idx, c] : a.coeffs()) {
        if (idx.l != p.d) return false;
        auto& s = residue_sum[static_cast<std::size_t>(idx.i % p.m())];
        s = checked_add(s, c);
    }
    for (auto s : residue_sum)
        if (s != 0) return false;
    return true;
}

/// Each radical basis element equals [M(1,(i-1)m+j)] ([M(1,m)] - 1) [M(d,0)].
inline bool radical_generator_check(const TaftParams& p) {
    const int m = p.m();
    const GreenElement generator =
        multiply(GreenElement::basis(p, 1, m) - GreenElement::unit(p), GreenElement::basis(p, p.d, 0));
    const auto basis = radical_basis(p);
    std::size_t k = 0;
    for (int i = 1; i < p.d; ++i)
        for (int j = 0; j < m; ++j, ++k)
            if (!(multiply(GreenElement::basis(p, 1, (i - 1) * m + j), generator) == basis[k])) return false;
    return true;
}

/// Simple classes multiply as the cyclic group Z_n (checked on both paths).
inline bool grothendieck_check(const TaftParams& p) {
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            const GreenElement lhs = GreenElement::basis(p, 1, a);
            const GreenElement rhs = GreenElement::basis(p, 1, b);
            const GreenElement expect = GreenElement::basis(p, 1, a + b);
            if (!(multiply(lhs, rhs, MultiplyPath::poly) == expect)) return false;
            if (!(multiply(lhs, rhs, MultiplyPath::oracle) == expect)) return false;
        }
    return true;
}

/// All nd basis classes in canonical order (l-major, then i).
inline std::vector<IndexPair> basis_indices(const TaftParams& p) {
    std::vector<IndexPair> out;
    for (int l = 1; l <= p.d; ++l)
        for (int i = 0; i < p.n; ++i) out.emplace_back(p, l, i);
    return out;
}

}  // namespace taft
