#pragma once

/**
 * @file fibpoly.hpp
 * @brief Generalized Fibonacci polynomials F_s(y, z) and their roots.
 *
 *   F_0 = 0, F_1 = 1, F_{s+2} = z F_{s+1} - y F_s
 *
 * F_s is monic of degree s-1 in z. For fixed a != 0 the roots of
 * F_s(a, x) are 2 sqrt(a) cos(j pi / s), j = 1..s-1.
 */

#include "cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taft {

/// Sparse bivariate integer polynomial; keys are (y-degree, z-degree).
class BivarPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Integer>;

    BivarPoly() = default;

    static BivarPoly constant(const Integer& c) { return monomial(c, 0, 0); }

    static BivarPoly monomial(const Integer& c, int y_deg, int z_deg) {
        BivarPoly p;
        if (c != 0) p.terms_[{y_deg, z_deg}] = c;
        return p;
    }

    static BivarPoly y() { return monomial(1, 1, 0); }
    static BivarPoly z() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(int y_deg, int z_deg) const {
        auto it = terms_.find({y_deg, z_deg});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    int z_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) deg = std::max(deg, e.second);
        return deg;
    }

    /// Coefficient of the top z power is the constant 1.
    bool monic_in_z() const {
        const int top = z_degree();
        if (top < 0) return false;
        for (const auto& [e, c] : terms_)
            if (e.second == top && (e.first != 0 || c != 1)) return false;
        return true;
    }

    BivarPoly& operator+=(const BivarPoly& b) {
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }

    BivarPoly& operator-=(const BivarPoly& b) {
        for (const auto& [e, c] : b.terms_) add_term(e, -c);
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }

    friend BivarPoly operator*(const Integer& s, const BivarPoly& a) {
        BivarPoly out;
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    /// p(y^k, z).
    BivarPoly substitute_y_power(int k) const {
        BivarPoly out;
        for (const auto& [e, c] : terms_) out.add_term({e.first * k, e.second}, c);
        return out;
    }

    std::complex<double> eval(std::complex<double> y_val, std::complex<double> z_val) const {
        std::complex<double> sum{0.0, 0.0};
        for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(y_val, e.first) * std::pow(z_val, e.second);
        return sum;
    }

    /// Human-readable form, z-degree descending then y-degree descending.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        std::vector<std::pair<Exponent, Integer>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            if (a.first.second != b.first.second) return a.first.second > b.first.second;
            return a.first.first > b.first.first;
        });
        for (const auto& [e, coef] : ordered) {
            Integer c = coef;
            if (c < 0) {
                os << (first ? "-" : " - ");
                c = -c;
            } else if (!first) {
                os << " + ";
            }
            first = false;
            const bool has_var = e.first > 0 || e.second > 0;
            if (c != 1 || !has_var) {
                os << c;
                if (has_var) os << '*';
            }
            bool wrote = false;
            if (e.first > 0) {
                os << 'y';
                if (e.first > 1) os << '^' << e.first;
                wrote = true;
            }
            if (e.second > 0) {
                if (wrote) os << '*';
                os << 'z';
                if (e.second > 1) os << '^' << e.second;
            }
        }
        return os.str();
    }

private:
    void add_term(const Exponent& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

namespace detail {

/// Recurrence with a selectable sign on the y term. The standard
/// polynomials use sign = -1; sign = +1 exists only for fault injection.
inline BivarPoly fib_poly_signed(int s, int sign) {
    if (s < 0) throw std::invalid_argument("fib_poly: s must be >= 0");
    BivarPoly prev;                          // F_0
    BivarPoly cur = BivarPoly::constant(1);  // F_1
    if (s == 0) return prev;
    const BivarPoly y_term = BivarPoly::monomial(sign, 1, 0);
    for (int k = 1; k < s; ++k) {
        BivarPoly next = BivarPoly::z() * cur + y_term * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

inline BivarPoly fib_poly(int s) { return detail::fib_poly_signed(s, -1); }

/// Alternating binomial form: sum_i (-1)^i C(s-1-i, i) y^i z^(s-1-2i).
inline BivarPoly fib_poly_closed(int s) {
    if (s < 1) throw std::invalid_argument("fib_poly_closed: s must be >= 1");
    BivarPoly out;
    for (int i = 0; 2 * i <= s - 1; ++i) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s - 1 - i), static_cast<unsigned long>(i));
        if (i % 2 == 1) binom = -binom;
        out += BivarPoly::monomial(binom, i, s - 1 - 2 * i);
    }
    return out;
}

/// Roots x_j = 2 sqrt(a) cos(j pi / s), j = 1..s-1, in index order.
/// Principal branch for sqrt(a).
inline std::vector<std::complex<double>> fib_roots(std::complex<double> a, int s) {
    if (a == std::complex<double>{0.0, 0.0}) throw std::invalid_argument("fib_roots: a must be nonzero");
    if (s < 2) throw std::invalid_argument("fib_roots: s must be >= 2");
    const std::complex<double> root_a = std::sqrt(a);
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(s - 1));
    for (int j = 1; j < s; ++j) out.push_back(2.0 * root_a * std::cos(j * std::numbers::pi / s));
    return out;
}

struct EtaRoot {
    std::complex<double> eta;  // exp(i j pi / s), a 2s-th root of unity != 1
    std::complex<double> x;    // sqrt(a) (eta + 1/eta)
};

inline std::vector<EtaRoot> fib_roots_eta(std::complex<double> a, int s) {
    if (a == std::complex<double>{0.0, 0.0}) throw std::invalid_argument("fib_roots_eta: a must be nonzero");
    if (s < 2) throw std::invalid_argument("fib_roots_eta: s must be >= 2");
    const std::complex<double> root_a = std::sqrt(a);
    std::vector<EtaRoot> out;
    out.reserve(static_cast<std::size_t>(s - 1));
    for (int j = 1; j < s; ++j) {
        const std::complex<double> eta = std::polar(1.0, j * std::numbers::pi / s);
        out.push_back({eta, root_a * (eta + 1.0 / eta)});
    }
    return out;
}

}  // namespace taft
