#include "taft/spectrum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace taft;

namespace {

const std::vector<TaftParams> kGrid = {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {12, 4}, {5, 5}, {6, 6}};

bool contains_point(const std::vector<SolutionPoint>& pts, Complex lambda, Complex mu, double tol = 1e-7) {
    for (const auto& s : pts)
        if (std::abs(s.lambda - lambda) < tol && std::abs(s.mu - mu) < tol) return true;
    return false;
}

// For fixed y = lambda, the z-roots of (z - lambda^m - 1) F_d(lambda^m, z)
// from the companion matrix, deduplicated.
std::vector<Complex> companion_z_roots(const TaftParams& p, Complex lambda) {
    const BivarPoly rel = presentation(p).relation(IdealKind::green);
    const int deg = rel.z_degree();
    std::vector<Complex> c(static_cast<std::size_t>(deg + 1), 0.0);
    for (const auto& [e, coeff] : rel.terms()) c[e.second] += coeff.get_d() * std::pow(lambda, e.first);
    CMatrix m = CMatrix::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) m(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<CMatrix> es(m);
    std::vector<Complex> out;
    for (Eigen::Index k = 0; k < deg; ++k) {
        const Complex r = es.eigenvalues()(k);
        bool seen = false;
        for (const auto& x : out) seen = seen || std::abs(x - r) < 1e-5;
        if (!seen) out.push_back(r);
    }
    return out;
}

GreenElement random_element(const TaftParams& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    GreenElement out(p);
    for (const auto& idx : basis_indices(p)) out.add(idx, c(rng));
    return out;
}

}  // namespace

TEST(SolveSystem, SmallCase) {
    const TaftParams p(4, 2);
    const auto pts = solve_system(p);
    ASSERT_EQ(pts.size(), 6u);
    const Complex i(0, 1);
    EXPECT_TRUE(contains_point(pts, 1.0, 2.0));
    EXPECT_TRUE(contains_point(pts, -1.0, 2.0));
    for (Complex l : {Complex(1.0), i, Complex(-1.0), -i}) EXPECT_TRUE(contains_point(pts, l, 0.0));
    EXPECT_EQ(solve_system(TaftParams(6, 3)).size(), 14u);
}

TEST(SolveSystem, CountAndResiduals) {
    for (const auto& p : kGrid) {
        const auto pts = solve_system(p);
        EXPECT_EQ(static_cast<int>(pts.size()), p.n * p.d - p.n + p.m());
        const BivarPoly rel = presentation(p).relation(IdealKind::green);
        for (const auto& s : pts) {
            EXPECT_NEAR(std::abs(s.lambda), 1.0, 1e-12);
            EXPECT_LE(std::abs(std::pow(s.lambda, p.n) - 1.0), 1e-10);
            EXPECT_LE(std::abs(rel.eval(s.lambda, s.mu)), 1e-8);
        }
    }
}

TEST(SolveSystem, MatchesCompanionRoots) {
    for (const auto& p : kGrid) {
        const auto pts = solve_system(p);
        std::size_t total = 0;
        for (int k = 0; k < p.n; ++k) {
            const Complex lambda = root_of_unity(p.n, k);
            const auto roots = companion_z_roots(p, lambda);
            total += roots.size();
            for (const auto& r : roots) EXPECT_TRUE(contains_point(pts, lambda, r, 1e-5)) << p.n << "," << p.d << " k=" << k;
        }
        EXPECT_EQ(total, pts.size());
    }
}

TEST(SolveSystem, DoubleRootLiesInSigmaFamily) {
    for (const auto& p : kGrid) {
        const auto pts = solve_system(p);
        for (int k = 0; k < p.n; ++k) {
            if (k % p.d == 0) continue;
            const Complex lambda = root_of_unity(p.n, k);
            const Complex target = 1.0 + std::pow(lambda, p.m());
            int hits = 0;
            for (const auto& s : pts)
                if (s.k == k && std::abs(s.mu - target) < 1e-9) {
                    EXPECT_TRUE(s.j.has_value());
                    ++hits;
                }
            EXPECT_EQ(hits, 1);
        }
    }
}

TEST(Evaluate, Characters) {
    std::mt19937 rng(31);
    for (const auto& p : {TaftParams(4, 2), TaftParams(6, 3), TaftParams(8, 4), TaftParams(5, 5)}) {
        const auto pts = solve_system(p);
        for (const auto& s : pts) {
            EXPECT_NEAR(std::abs(evaluate(GreenElement::unit(p), s) - 1.0), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(evaluate(GreenElement::basis(p, 2, 0), s) - s.mu), 0.0, 1e-12);
            for (const auto& r : radical_basis(p)) EXPECT_LE(std::abs(evaluate(r, s)), 1e-8);
        }
        for (int t = 0; t < 30; ++t) {
            const auto a = random_element(p, rng);
            const auto b = random_element(p, rng);
            const auto ab = multiply(a, b);
            for (const auto& s : pts) {
                const Complex want = evaluate(a, s) * evaluate(b, s);
                EXPECT_LE(std::abs(evaluate(ab, s) - want), 1e-8 * (1.0 + std::abs(want)));
            }
        }
    }
}

TEST(Evaluate, NilpotencyAgreesWithExactTest) {
    std::mt19937 rng(37);
    for (const auto& p : {TaftParams(4, 2), TaftParams(6, 3), TaftParams(6, 2)}) {
        const auto pts = solve_system(p);
        const auto rad = radical_basis(p);
        std::uniform_int_distribution<int> c(-3, 3);
        for (int t = 0; t < 1000; ++t) {
            GreenElement x = random_element(p, rng);
            if (t % 2) {  // half the sample inside the radical
                x = GreenElement(p);
                for (const auto& r : rad) x += c(rng) * r;
            }
            EXPECT_EQ(is_nilpotent(x), vanishes_on_spectrum(x, pts)) << x.str();
        }
    }
}

TEST(RModules, TwoDimensionalClasses) {
    const TaftParams p(4, 2);
    const RModuleClass v = two_dim_class(p, 1);
    EXPECT_NEAR(std::abs(v.y(0, 0) - Complex(0, 1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(v.z(0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(v.z(0, 1) - 1.0), 0.0, 1e-12);
    EXPECT_THROW(two_dim_class(p, 2), std::invalid_argument);
    EXPECT_EQ(two_dim_indecomposables(TaftParams(6, 3)).size(), 4u);
    EXPECT_EQ(irreducibles(TaftParams(6, 3)).size(), 14u);
    for (const auto& q : kGrid) {
        for (const auto& c : irreducibles(q)) EXPECT_LE(green_relation_residual(q, c.y, c.z).max(), 1e-8);
        for (const auto& c : two_dim_indecomposables(q)) {
            EXPECT_LE(green_relation_residual(q, c.y, c.z).max(), 1e-8);
            // indecomposable but reducible: Z is a single Jordan block
            EXPECT_GT(std::abs(c.z(0, 1)), 0.5);
            EXPECT_EQ(classify_R_module(q, c.y, c.z).size(), 1u);
        }
    }
}

TEST(Classify, Examples) {
    const TaftParams p(4, 2);
    const RModuleClass v1 = two_dim_class(p, 1);
    auto got = classify_R_module(p, v1.y, v1.z);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0], v1);

    const auto pts = solve_system(p);
    const RModuleClass a = one_dim_class(pts[0]);
    const RModuleClass b = one_dim_class(pts[3]);
    auto [y2, z2] = direct_sum({a, b});
    std::vector<RModuleClass> want{a, b};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(classify_R_module(p, y2, z2), want);

    const RModuleClass c = one_dim_class(pts[0]);  // (1, 2)
    auto [y3, z3] = direct_sum({v1, c});
    want = {v1, c};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(classify_R_module(p, y3, z3), want);
}

TEST(Classify, RoundTripOnRandomSums) {
    std::mt19937 rng(41);
    for (const auto& p : kGrid) {
        std::vector<RModuleClass> pool = irreducibles(p);
        for (auto& c : two_dim_indecomposables(p)) pool.push_back(c);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> size(1, 6);
        for (int t = 0; t < 30; ++t) {
            std::vector<RModuleClass> sample;
            const int count = size(rng);
            for (int s = 0; s < count; ++s) sample.push_back(pool[pick(rng)]);
            std::sort(sample.begin(), sample.end());
            auto [y, z] = direct_sum(sample);
            // conjugation by a random unitary must not matter
            const CMatrix q = CMatrix::Random(y.rows(), y.rows()).householderQr().householderQ();
            const CMatrix yc = q * y * q.adjoint();
            const CMatrix zc = q * z * q.adjoint();
            EXPECT_EQ(classify_R_module(p, yc, zc), sample);
        }
    }
}

TEST(Classify, RejectsInvalidInput) {
    const TaftParams p(4, 2);
    CMatrix y = CMatrix::Identity(1, 1);
    CMatrix z = CMatrix::Constant(1, 1, 5.0);
    EXPECT_THROW(classify_R_module(p, y, z), std::invalid_argument);
    // Jordan block at the simple character (1, 2)
    CMatrix y2 = CMatrix::Identity(2, 2);
    CMatrix z2 = 2.0 * CMatrix::Identity(2, 2);
    z2(0, 1) = 1.0;
    EXPECT_THROW(classify_R_module(p, y2, z2), std::invalid_argument);
    // non-commuting pair
    CMatrix y3 = CMatrix::Identity(2, 2);
    y3(1, 1) = -1.0;
    CMatrix z3 = CMatrix::Zero(2, 2);
    z3(0, 1) = 1.0;
    EXPECT_THROW(classify_R_module(p, y3, z3), std::invalid_argument);
}

TEST(Census, Counts) {
    auto check = [](int n, int d, int total, int one, int two) {
        const BlockCensus c = block_census(TaftParams(n, d));
        EXPECT_TRUE(c.consistent);
        EXPECT_EQ(c.total, total);
        EXPECT_EQ(c.dim1_blocks, one);
        EXPECT_EQ(c.dim2_blocks, two);
    };
    check(4, 2, 8, 4, 2);
    check(6, 3, 18, 10, 4);
    for (int n : {3, 4, 5, 6}) check(n, n, n * n, n * n - 2 * n + 2, n - 1);
    for (const auto& p : kGrid) EXPECT_TRUE(block_census(p).consistent);
}

TEST(ProjectiveReps, CountsAndRelations) {
    const auto reps = projective_algebra_reps(TaftParams(4, 2));
    EXPECT_EQ(reps.one_dim.size(), 6u);
    EXPECT_EQ(reps.two_dim.size(), 2u);
    for (const auto& p : kGrid) {
        const auto r = projective_algebra_reps(p);
        EXPECT_EQ(static_cast<int>(r.one_dim.size()), p.n + p.m());
        EXPECT_EQ(static_cast<int>(r.two_dim.size()), p.n - p.m());
        for (const auto* list : {&r.one_dim, &r.two_dim})
            for (const auto& rep : *list) {
                EXPECT_LE(projective_relation_residual(p, rep.y, rep.z).max(), 1e-8) << rep.label();
                if (rep.kind == ProjectiveRep::Kind::simple_d) EXPECT_NEAR(std::abs(rep.z(0, 0) - Complex(p.d)), 0.0, 1e-12);
            }
    }
}

TEST(ProjectiveReps, CharactersAnnihilateRadical) {
    for (const auto& p : kGrid) {
        const CMatrix chars = projective_character_matrix(p);
        const GreenPresentation& pres = presentation(p);
        for (const auto& r : radical_basis(p))
            EXPECT_LE((chars * projective_coordinates(pres.to_projective(r))).norm(), 1e-8);
        // a non-radical projective element is detected
        const auto x = GreenElement::basis(p, p.d, 0);
        EXPECT_GT((chars * projective_coordinates(pres.to_projective(x))).norm(), 1e-3);
    }
}

TEST(Stable, FullRank) {
    for (const auto& p : {TaftParams(4, 2), TaftParams(6, 2), TaftParams(6, 3)}) {
        const StableRankReport r = stable_rank_report(p);
        EXPECT_TRUE(r.full_rank);
        EXPECT_EQ(r.rank, p.n * (p.d - 1));
        EXPECT_GT(r.min_scaled_singular_value, 1e-8);
        EXPECT_TRUE(stable_semiprimitivity_check(p));
    }
    EXPECT_EQ(stable_rank_report(TaftParams(4, 2)).characters, 4);
}
