#pragma once

/**
 * @file selfcheck.hpp
 * @brief The ten grid-wide consistency criteria, shared by the acceptance
 * binary and `greenring selfcheck`.
 */

#include "greenring.hpp"
#include "spectrum.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace taft {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelfcheckOptions {
    std::vector<TaftParams> grid;
    int recurrence_sign = -1;  // +1 corrupts the poly path on purpose
    int nilpotency_samples = 1000;
    int classifier_samples = 100;
    int classifier_max_dim = 12;
    std::uint32_t seed = 20240611u;
};

inline std::vector<TaftParams> default_grid() {
    return {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {12, 4}, {5, 5}, {6, 6}};
}

namespace detail {

inline std::string grid_label(const TaftParams& p) { return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + ")"; }

inline GreenElement random_element(const TaftParams& p, std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    GreenElement out(p);
    for (const auto& idx : basis_indices(p)) out.add(idx, coeff(rng));
    return out;
}

inline GreenElement from_multiset(const TaftParams& p, const std::vector<IndexPair>& parts) {
    GreenElement out(p);
    for (const auto& idx : parts) out.add(idx, 1);
    return out;
}

// Accumulates failures; the first few are kept for the report.
struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed < 3) first += (first.empty() ? "" : "; ") + what;
        ++failed;
    }

    CriterionResult result(int id, std::string name) const {
        std::ostringstream os;
        os << checked - failed << "/" << checked << " checks";
        if (failed) os << "; failures: " << first;
        return {id, std::move(name), failed == 0 && checked > 0, os.str()};
    }
};

}  // namespace detail

/// 1. Poly-path products agree with decompose(tensor) on all basis pairs.
inline CriterionResult check_tensor_agreement(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        const GreenPresentation pres(p, opt.recurrence_sign);
        const auto basis = basis_indices(p);
        int bad = 0;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const GreenElement x = GreenElement::basis(p, a.l, a.i);
                const GreenElement y = GreenElement::basis(p, b.l, b.i);
                bool ok = false;
                try {
                    ok = pres.multiply(x, y, MultiplyPath::poly) == pres.multiply(x, y, MultiplyPath::oracle);
                } catch (const std::exception&) {
                    ok = false;
                }
                if (!ok) ++bad;
            }
        t.check(bad == 0, detail::grid_label(p) + " " + std::to_string(bad) + " disagreeing pairs");
    }
    return t.result(1, "tensor/ring agreement");
}

/// 2. Monomial canonical forms are distinct and the basis maps round-trip.
inline CriterionResult check_presentation_rank(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        const GreenPresentation pres(p, opt.recurrence_sign);
        std::vector<QuotientPoly> forms;
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.d; ++j) forms.push_back(pres.reduce(BivarPoly::monomial(1, i, j), IdealKind::green));
        bool distinct = true;
        for (std::size_t a = 0; a < forms.size(); ++a)
            for (std::size_t b = a + 1; b < forms.size(); ++b)
                if (forms[a] == forms[b]) distinct = false;
        t.check(distinct && forms.size() == static_cast<std::size_t>(p.rank()), detail::grid_label(p) + " monomials");
        bool round = true;
        for (const auto& idx : basis_indices(p)) {
            const GreenElement e = GreenElement::basis(p, idx.l, idx.i);
            if (!(pres.poly_to_basis(pres.to_poly(e)) == e)) round = false;
        }
        for (const auto& f : forms)
            if (!(pres.to_poly(pres.poly_to_basis(f)) == f)) round = false;
        t.check(round, detail::grid_label(p) + " round trip");
    }
    return t.result(2, "presentation rank");
}

/// 3. Recurrence equals closed form (1 <= s <= 30); roots vanish (s <= 12).
inline CriterionResult check_fibonacci() {
    detail::Tally t;
    for (int s = 1; s <= 30; ++s) t.check(fib_poly(s) == fib_poly_closed(s), "F_" + std::to_string(s) + " closed form");
    double worst = 0.0;
    for (int s = 2; s <= 12; ++s)
        for (int k = 0; k < 24; ++k) {
            const Complex a = root_of_unity(24, k);
            const BivarPoly f = fib_poly(s);
            for (const auto& x : fib_roots(a, s)) worst = std::max(worst, std::abs(f.eval(a, x)));
        }
    t.check(worst <= kRelationTolerance, "max root residual " + std::to_string(worst));
    return t.result(3, "Fibonacci identities");
}

/// 4. |solutions| = nd - n + m after deduplication.
inline CriterionResult check_solution_count(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        const auto sols = solve_system(p);
        const int expect = p.n * p.d - p.n + p.m();
        t.check(static_cast<int>(sols.size()) == expect,
                detail::grid_label(p) + " got " + std::to_string(sols.size()) + " want " + std::to_string(expect));
        const BivarPoly rel = presentation(p).relation(IdealKind::green);
        double worst = 0.0;
        for (const auto& s : sols) {
            worst = std::max(worst, std::abs(std::pow(s.lambda, p.n) - 1.0));
            worst = std::max(worst, std::abs(rel.eval(s.lambda, s.mu)));
        }
        t.check(worst <= kRelationTolerance, detail::grid_label(p) + " residual " + std::to_string(worst));
    }
    return t.result(4, "solution count");
}

/// 5. Radical rank, J^2 = 0, generator certificate, nilpotency agreement.
inline CriterionResult check_radical(const SelfcheckOptions& opt) {
    detail::Tally t;
    std::mt19937 rng(opt.seed);
    for (const auto& p : opt.grid) {
        const std::string at = detail::grid_label(p);
        const auto rad = radical_basis(p);
        t.check(static_cast<int>(rad.size()) == p.n - p.m(), at + " radical rank");
        bool square_zero = true;
        for (const auto& a : rad)
            for (const auto& b : rad)
                if (!multiply(a, b).is_zero()) square_zero = false;
        t.check(square_zero, at + " J^2");
        t.check(radical_generator_check(p), at + " generator");
        const auto spec = solve_system(p);
        int disagree = 0;
        for (int s = 0; s < opt.nilpotency_samples; ++s) {
            const GreenElement x = detail::random_element(p, rng, -3, 3);
            if (is_nilpotent(x) != vanishes_on_spectrum(x, spec)) ++disagree;
        }
        // random radical elements exercise the nilpotent side
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int s = 0; s < 50; ++s) {
            GreenElement x(p);
            for (const auto& r : rad) x += coeff(rng) * r;
            if (!is_nilpotent(x) || !vanishes_on_spectrum(x, spec) || !in_radical_span(x)) ++disagree;
        }
        t.check(disagree == 0, at + " " + std::to_string(disagree) + " nilpotency disagreements");
    }
    return t.result(5, "radical");
}

/// 6. Counts of irreducibles, V(k) classes and blocks; relations vanish.
inline CriterionResult check_census(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        const std::string at = detail::grid_label(p);
        const auto irr = irreducibles(p);
        const auto two = two_dim_indecomposables(p);
        const int n = p.n;
        const int m = p.m();
        t.check(static_cast<int>(irr.size()) == n * p.d - n + m, at + " irreducibles");
        t.check(static_cast<int>(two.size()) == n - m, at + " two-dim");
        t.check(static_cast<int>(irr.size() + two.size()) == n * p.d, at + " total");
        const BlockCensus c = block_census(p);
        t.check(c.consistent && c.total == n * p.d && c.dim1_blocks == n * p.d - 2 * (n - m) && c.dim2_blocks == n - m,
                at + " block census");
        double worst = 0.0;
        for (const auto* list : {&irr, &two})
            for (const auto& cls : *list) worst = std::max(worst, green_relation_residual(p, cls.y, cls.z).max());
        t.check(worst <= kRelationTolerance, at + " relation residual " + std::to_string(worst));
    }
    return t.result(6, "representation census");
}

/// 7. classify_R_module recovers random direct sums.
inline CriterionResult check_classifier(const SelfcheckOptions& opt) {
    detail::Tally t;
    std::mt19937 rng(opt.seed + 7u);
    for (const auto& p : opt.grid) {
        std::vector<RModuleClass> pool = irreducibles(p);
        for (auto& c : two_dim_indecomposables(p)) pool.push_back(std::move(c));
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        int bad = 0;
        for (int s = 0; s < opt.classifier_samples; ++s) {
            std::uniform_int_distribution<int> target(1, opt.classifier_max_dim);
            const int want = target(rng);
            std::vector<RModuleClass> sample;
            int dim = 0;
            while (dim < want) {
                const RModuleClass& c = pool[pick(rng)];
                if (dim + c.y.rows() > opt.classifier_max_dim) continue;
                sample.push_back(c);
                dim += static_cast<int>(c.y.rows());
            }
            std::sort(sample.begin(), sample.end());
            const auto [y, z] = direct_sum(sample);
            try {
                if (!(classify_R_module(p, y, z) == sample)) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
        t.check(bad == 0, detail::grid_label(p) + " " + std::to_string(bad) + " misclassified");
    }
    return t.result(7, "classifier round trip");
}

/// 8. star is an involution and matches the module dual.
inline CriterionResult check_duality(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        int bad = 0;
        for (const auto& idx : basis_indices(p)) {
            const GreenElement e = GreenElement::basis(p, idx.l, idx.i);
            const GreenElement s = star(e);
            if (!(star(s) == e)) ++bad;
            if (!(s == detail::from_multiset(p, decompose(dual(build_module(p, idx)))))) ++bad;
        }
        t.check(bad == 0, detail::grid_label(p) + " " + std::to_string(bad) + " duality failures");
    }
    return t.result(8, "duality");
}

/// 9. Projective nilradical equals the radical span; stable ring is reduced.
inline CriterionResult check_projective_stable(const SelfcheckOptions& opt) {
    detail::Tally t;
    for (const auto& p : opt.grid) {
        const std::string at = detail::grid_label(p);
        const GreenPresentation& pres = presentation(p);
        const CMatrix chars = projective_character_matrix(p);
        Eigen::JacobiSVD<CMatrix> svd(chars);
        int rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > kRelationTolerance * svd.singularValues()(0)) ++rank;
        const int nullity = static_cast<int>(chars.cols()) - rank;
        t.check(nullity == p.n - p.m(), at + " projective nullity " + std::to_string(nullity));
        bool inside = true;
        for (const auto& r : radical_basis(p)) {
            const QuotientPoly q = pres.to_projective(r);
            if ((chars * projective_coordinates(q)).norm() > kRelationTolerance) inside = false;
            if (!pres.multiply(q, q).is_zero()) inside = false;
            if (!(pres.from_projective(q) == r)) inside = false;
        }
        t.check(inside, at + " radical inside projective nilradical");
        const StableRankReport s = stable_rank_report(p);
        t.check(s.full_rank && s.rank == p.n * (p.d - 1),
                at + " stable rank " + std::to_string(s.rank) + " min sv " + std::to_string(s.min_scaled_singular_value));
    }
    return t.result(9, "projective/stable");
}

/// 10. At (5,5) the green relation is (z - y - 1) F_5(y, z).
inline CriterionResult check_taft_specialization() {
    detail::Tally t;
    const TaftParams p(5, 5);
    const BivarPoly expect = (BivarPoly::z() - BivarPoly::y() - BivarPoly::constant(1)) * fib_poly(5);
    t.check(presentation(p).relation(IdealKind::green) == expect, "(5,5) relation");
    return t.result(10, "Taft specialization");
}

inline std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& opt) {
    return {check_tensor_agreement(opt), check_presentation_rank(opt), check_fibonacci(),
            check_solution_count(opt),   check_radical(opt),           check_census(opt),
            check_classifier(opt),       check_duality(opt),           check_projective_stable(opt),
            check_taft_specialization()};
}

}  // namespace taft
