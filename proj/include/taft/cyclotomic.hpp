#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(w), w = exp(2*pi*i/n).
 *
 * A CycNum holds n rational coordinates over the spanning set
 * {w^0, ..., w^(n-1)}, stored sparsely (nonzero coordinates only).
 * Products are cyclic convolutions (exponents wrap mod n). The representation is not unique; two values are equal iff
 * their coordinate polynomials agree modulo the n-th cyclotomic
 * polynomial, and canonical() produces that reduced representative.
 */

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace taft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with exact integer coefficients, lowest
/// degree first. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(Integer c, std::size_t degree) {
        std::vector<Integer> v(degree + 1, 0);
        v[degree] = std::move(c);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(out));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Exact division by a monic divisor; throws if the remainder is nonzero.
    IntPoly exact_div(const IntPoly& divisor) const {
        if (divisor.is_zero() || divisor.leading() != 1)
            throw std::invalid_argument("IntPoly::exact_div: divisor must be monic");
        std::vector<Integer> rem = coeffs_;
        const int dd = divisor.degree();
        if (degree() < dd) {
            if (!is_zero()) throw std::domain_error("IntPoly::exact_div: nonzero remainder");
            return {};
        }
        std::vector<Integer> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
        for (int k = degree(); k >= dd; --k) {
            const Integer c = rem[k];
            if (c == 0) continue;
            quot[k - dd] = c;
            for (int t = 0; t <= dd; ++t) rem[k - dd + t] -= c * divisor.coeffs_[t];
        }
        for (int k = 0; k < dd; ++k)
            if (rem[k] != 0) throw std::domain_error("IntPoly::exact_div: nonzero remainder");
        return IntPoly(std::move(quot));
    }

    std::string str(char var = 'x') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Integer c = coeffs_[k];
            if (c == 0) continue;
            if (c < 0) {
                os << (first ? "-" : " - ");
                c = -c;
            } else if (!first) {
                os << " + ";
            }
            first = false;
            if (c != 1 || k == 0) os << c;
            if (k > 0) os << var;
            if (k > 1) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

namespace detail {

/// Per-order data shared by every CycNum of that order: Phi_n and the
/// residues of x^e modulo Phi_n for 0 <= e < n.
struct CyclotomicData {
    int order = 0;
    IntPoly phi;
    int phi_degree = 0;
    std::vector<std::vector<Integer>> power_residues;  // [e][t], t < phi_degree
};

inline IntPoly compute_cyclotomic(int n, std::map<int, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly(std::vector<Integer>{1});
    for (int k = 1; k < n; ++k)
        if (n % k == 0) p = p.exact_div(compute_cyclotomic(k, memo));
    memo.emplace(n, p);
    return p;
}

inline const CyclotomicData& cyclotomic_data(int n) {
    thread_local int last_order = -1;
    thread_local const CyclotomicData* last = nullptr;
    if (n == last_order) return *last;
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicData>> cache;
    static std::map<int, IntPoly> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto data = std::make_unique<CyclotomicData>();
        data->order = n;
        data->phi = compute_cyclotomic(n, memo);
        data->phi_degree = data->phi.degree();
        const int f = data->phi_degree;
        // residue of x^e: shift the previous residue and fold the x^f term back.
        std::vector<Integer> cur(static_cast<std::size_t>(f), 0);
        if (f > 0) cur[0] = 1;
        for (int e = 0; e < n; ++e) {
            data->power_residues.push_back(cur);
            std::vector<Integer> next(static_cast<std::size_t>(f), 0);
            const Integer top = cur[f - 1];
            for (int t = f - 1; t >= 1; --t) next[t] = cur[t - 1];
            for (int t = 0; t < f; ++t) next[t] -= top * data->phi.coeff(t);
            cur = std::move(next);
        }
        slot = std::move(data);
    }
    last_order = n;
    last = slot.get();
    return *slot;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_k
/// over the proper divisors k of n. Cached per order.
inline IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    return detail::cyclotomic_data(n).phi;
}

class CycNum {
public:
    /// Nonzero coordinate: coefficient of w^exp, 0 <= exp < n.
    struct Term {
        int exp;
        Rational coef;
    };

    CycNum() = default;

    /// Zero of Q(w) with w of the given order.
    explicit CycNum(int order) : order_(check_order(order)) {}

    CycNum(int order, const std::vector<Rational>& coeffs) : order_(check_order(order)) {
        if (coeffs.size() != static_cast<std::size_t>(order_))
            throw std::invalid_argument("CycNum: coefficient vector must have length n");
        for (std::size_t e = 0; e < coeffs.size(); ++e)
            if (sgn(coeffs[e]) != 0) terms_.push_back({static_cast<int>(e), coeffs[e]});
    }

    static CycNum zero(int order) { return CycNum(order); }

    static CycNum rational(int order, const Rational& value) {
        CycNum out(order);
        if (sgn(value) != 0) out.terms_.push_back({0, value});
        return out;
    }

    static CycNum one(int order) { return rational(order, 1); }

    /// w^e, exponent taken mod n (negative exponents allowed).
    static CycNum root_power(int order, long long e) {
        CycNum out(order);
        out.terms_.push_back({static_cast<int>(wrap(e, order)), Rational(1)});
        return out;
    }

    int order() const { return order_; }

    /// The n coordinates over {w^0, ..., w^(n-1)}.
    std::vector<Rational> coeffs() const {
        std::vector<Rational> out(static_cast<std::size_t>(order_), 0);
        for (const auto& t : terms_) out[static_cast<std::size_t>(t.exp)] = t.coef;
        return out;
    }

    Rational coeff(int e) const {
        for (const auto& t : terms_)
            if (t.exp == e) return t.coef;
        return 0;
    }

    /// Nonzero coordinates in increasing exponent order.
    const std::vector<Term>& terms() const { return terms_; }

    /// True iff every stored coordinate is zero. Value-zero numbers in a
    /// non-canonical representation may still report false.
    bool is_structural_zero() const { return terms_.empty(); }

    /// Reduced representative: coordinate polynomial mod Phi_n.
    CycNum canonical() const {
        if (terms_.empty()) return *this;
        const auto& data = detail::cyclotomic_data(order_);
        if (terms_.back().exp < data.phi_degree) return *this;
        CycNum out(order_);
        for (const auto& t : terms_) {
            if (t.exp < data.phi_degree) {
                out.terms_.push_back(t);
                continue;
            }
            const auto& res = data.power_residues[static_cast<std::size_t>(t.exp)];
            for (int k = 0; k < data.phi_degree; ++k)
                if (res[k] != 0) out.terms_.push_back({k, t.coef * res[k]});
        }
        out.normalize();
        return out;
    }

    void canonicalize() {
        if (!terms_.empty()) *this = canonical();
    }

    bool is_zero() const { return is_structural_zero() || canonical().is_structural_zero(); }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        return (a - b).is_zero();
    }

    CycNum operator-() const {
        CycNum out(*this);
        for (auto& t : out.terms_) t.coef = -t.coef;
        return out;
    }

    CycNum& operator+=(const CycNum& b) { return merge(b, false); }
    CycNum& operator-=(const CycNum& b) { return merge(b, true); }

    CycNum& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.coef *= s;
        return *this;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
    friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        CycNum out(a.order_);
        if (a.terms_.empty() || b.terms_.empty()) return out;
        const int n = a.order_;
        out.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                int e = ta.exp + tb.exp;
                if (e >= n) e -= n;
                out.terms_.push_back({e, ta.coef * tb.coef});
            }
        out.normalize();
        return out;
    }

    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    /// this * w^e: a cyclic shift of the coordinates.
    CycNum shifted(long long e) const {
        if (terms_.empty()) return *this;
        const int s = static_cast<int>(wrap(e, order_));
        CycNum out(*this);
        for (auto& t : out.terms_) t.exp = (t.exp + s) % order_;
        std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
        return out;
    }

    /// Multiplicative inverse, returned in canonical form. Solves the
    /// linear system for multiplication-by-this in the power basis mod Phi_n.
    CycNum inverse() const {
        const CycNum a = canonical();
        if (a.is_structural_zero()) throw std::domain_error("CycNum::inverse: division by zero");
        if (a.terms_.size() == 1) {
            // c w^e -> c^{-1} w^{-e}
            CycNum out(order_);
            out.terms_.push_back({static_cast<int>(wrap(-a.terms_[0].exp, order_)), 1 / a.terms_[0].coef});
            return out.canonical();
        }
        const auto& data = detail::cyclotomic_data(order_);
        const int f = data.phi_degree;
        // column t holds the canonical coordinates of a * w^t
        std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(f), std::vector<Rational>(f + 1, 0));
        for (int t = 0; t < f; ++t) {
            const CycNum col = a.shifted(t).canonical();
            for (const auto& term : col.terms_) mat[term.exp][t] = term.coef;
        }
        mat[0][f] = 1;
        for (int col = 0; col < f; ++col) {
            int piv = col;
            while (piv < f && sgn(mat[piv][col]) == 0) ++piv;
            if (piv == f) throw std::logic_error("CycNum::inverse: singular multiplication matrix");
            std::swap(mat[piv], mat[col]);
            const Rational inv = 1 / mat[col][col];
            for (int c = col; c <= f; ++c) mat[col][c] *= inv;
            for (int r = 0; r < f; ++r) {
                if (r == col || sgn(mat[r][col]) == 0) continue;
                const Rational factor = mat[r][col];
                for (int c = col; c <= f; ++c) mat[r][c] -= factor * mat[col][c];
            }
        }
        CycNum out(order_);
        for (int r = 0; r < f; ++r)
            if (sgn(mat[r][f]) != 0) out.terms_.push_back({r, mat[r][f]});
        return out;
    }

    /// Numeric value under w -> exp(2*pi*i/n).
    std::complex<double> embed() const {
        std::complex<double> sum{0.0, 0.0};
        const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
        for (const auto& t : terms_) sum += t.coef.get_d() * std::polar(1.0, step * static_cast<double>(t.exp));
        return sum;
    }

    std::string str() const {
        const CycNum c = canonical();
        if (c.terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : c.terms_) {
            Rational v = t.coef;
            if (v < 0) {
                os << (first ? "-" : " - ");
                v = -v;
            } else if (!first) {
                os << " + ";
            }
            first = false;
            if (t.exp == 0) {
                os << v;
            } else {
                if (v != 1) os << v << '*';
                os << 'w';
                if (t.exp > 1) os << '^' << t.exp;
            }
        }
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("CycNum: order must be >= 1");
        return order;
    }

    static void check_same(const CycNum& a, const CycNum& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("CycNum: order mismatch");
    }

    static long long wrap(long long e, int n) {
        long long r = e % n;
        return r < 0 ? r + n : r;
    }

    CycNum& merge(const CycNum& b, bool subtract) {
        check_same(*this, b);
        if (b.terms_.empty()) return *this;
        std::vector<Term> out;
        out.reserve(terms_.size() + b.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < terms_.size() && terms_[i].exp < b.terms_[j].exp)) {
                out.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || b.terms_[j].exp < terms_[i].exp) {
                out.push_back({b.terms_[j].exp, subtract ? Rational(-b.terms_[j].coef) : b.terms_[j].coef});
                ++j;
            } else {
                Term t = std::move(terms_[i++]);
                if (subtract) t.coef -= b.terms_[j].coef;
                else t.coef += b.terms_[j].coef;
                ++j;
                if (sgn(t.coef) != 0) out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    // sort by exponent, combine duplicates, drop zeros
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            Term acc = std::move(terms_[r++]);
            while (r < terms_.size() && terms_[r].exp == acc.exp) acc.coef += terms_[r++].coef;
            if (sgn(acc.coef) != 0) terms_[w++] = std::move(acc);
        }
        terms_.resize(w);
    }

    int order_ = 1;
    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

enum class CycOp { add, sub, mul };

inline CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
    switch (op) {
        case CycOp::add: return a + b;
        case CycOp::sub: return a - b;
        case CycOp::mul: return a * b;
    }
    throw std::invalid_argument("cyc_arith: unknown op");
}

inline std::complex<double> cyc_embed(const CycNum& a) { return a.embed(); }

}  // namespace taft
