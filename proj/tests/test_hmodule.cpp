#include "taft/hmodule.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace taft;

namespace {

using Multiset = std::vector<IndexPair>;

Multiset ms(const TaftParams& p, std::initializer_list<std::pair<int, int>> parts) {
    Multiset out;
    for (auto [l, i] : parts) out.emplace_back(p, l, i);
    std::sort(out.begin(), out.end());
    return out;
}

Eigen::MatrixXcd to_complex(const CycMatrix& a) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).embed();
    return out;
}

int numeric_rank(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    int r = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > 1e-8) ++r;
    return r;
}

// Independent multiplicity count in floating point. With V_i the g-weight
// space for w^i, chains with top in V_i of length >= t+1 number
// rank(h^t on V_i) - rank(h^{t+1} on V_{i+m}).
Multiset rank_oracle(const HModule& a) {
    const TaftParams& p = a.params();
    const Eigen::MatrixXcd g = to_complex(a.g());
    const Eigen::MatrixXcd h = to_complex(a.h());
    const auto dim = g.rows();
    std::vector<Eigen::MatrixXcd> space(static_cast<std::size_t>(p.n));
    for (int r = 0; r < p.n; ++r) {
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
        Eigen::MatrixXcd gp = Eigen::MatrixXcd::Identity(dim, dim);
        for (int j = 0; j < p.n; ++j) {
            proj += std::polar(1.0, -2.0 * std::numbers::pi * r * j / p.n) * gp;
            gp = gp * g;
        }
        proj /= static_cast<double>(p.n);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj, Eigen::ComputeFullU);
        const int rank = numeric_rank(proj);
        space[r] = svd.matrixU().leftCols(rank);
    }
    auto chain_rank = [&](int weight, int t) {
        Eigen::MatrixXcd ht = Eigen::MatrixXcd::Identity(dim, dim);
        for (int k = 0; k < t; ++k) ht = h * ht;
        return numeric_rank(ht * space[p.wrap(weight)]);
    };
    auto at_least = [&](int i, int len) { return chain_rank(i, len - 1) - chain_rank(i + p.m(), len); };
    Multiset out;
    for (int i = 0; i < p.n; ++i)
        for (int l = 1; l <= p.d; ++l) {
            const int count = at_least(i, l) - (l < p.d ? at_least(i, l + 1) : 0);
            for (int c = 0; c < count; ++c) out.emplace_back(p, l, i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Multiset random_multiset(const TaftParams& p, std::mt19937& rng, int max_dim) {
    std::uniform_int_distribution<int> len(1, p.d);
    std::uniform_int_distribution<int> idx(0, p.n - 1);
    std::uniform_int_distribution<int> target(1, max_dim);
    Multiset out;
    const int want = target(rng);
    int dim = 0;
    while (dim < want) {
        const int l = std::min(len(rng), want - dim);
        out.emplace_back(p, l, idx(rng));
        dim += l;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random invertible matrix over Q: unit lower times unit upper triangular.
CycMatrix random_invertible(int n, std::size_t dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    CycMatrix lower = CycMatrix::identity(n, dim);
    CycMatrix upper = CycMatrix::identity(n, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < r; ++k) {
            lower(r, k) = CycNum::rational(n, c(rng));
            upper(k, r) = CycNum::rational(n, c(rng));
        }
    return lower * upper;
}

}  // namespace

TEST(BuildModule, Examples) {
    const TaftParams p(4, 2);
    const HModule triv = build_module(p, 1, 0);
    EXPECT_TRUE(triv.g().is_identity());
    EXPECT_TRUE(triv.h().is_zero());

    const HModule m20 = build_module(p, 2, 0);
    EXPECT_EQ(m20.g()(0, 0), CycNum::one(4));
    EXPECT_EQ(m20.g()(1, 1), -CycNum::one(4));
    EXPECT_EQ(m20.h()(1, 0), CycNum::one(4));
    EXPECT_TRUE(m20.h()(0, 1).is_zero());

    const HModule m11 = build_module(p, 1, 1);
    EXPECT_EQ(m11.g()(0, 0), CycNum::root_power(4, 1));

    EXPECT_THROW(build_module(p, 3, 0), std::out_of_range);
    EXPECT_EQ(IndexPair(p, 2, -1).i, 3);
}

TEST(HModuleRelations, RejectsViolations) {
    const TaftParams p(4, 2);
    CycMatrix g = CycMatrix::identity(4, 2);
    CycMatrix h(4, 2, 2);
    h(1, 0) = CycNum::one(4);
    EXPECT_THROW(HModule(p, g, h), std::invalid_argument);  // hg != q gh
    CycMatrix g_bad(4, 1, 1);
    g_bad(0, 0) = CycNum::rational(4, 2);
    EXPECT_THROW(HModule(p, g_bad, CycMatrix(4, 1, 1)), std::invalid_argument);
    EXPECT_THROW(HModule(p, CycMatrix::identity(6, 1), CycMatrix(6, 1, 1)), std::invalid_argument);
}

TEST(Tensor, SimpleTimesAnything) {
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}}) {
        const TaftParams p(n, d);
        for (int i = 0; i < n; ++i)
            for (int l = 1; l <= d; ++l)
                for (int r : {0, 1, n - 1}) {
                    EXPECT_EQ(decompose(tensor(build_module(p, 1, i), build_module(p, l, r))), ms(p, {{l, r + i}}));
                    EXPECT_EQ(decompose(tensor(build_module(p, l, r), build_module(p, 1, i))), ms(p, {{l, r + i}}));
                }
    }
}

TEST(Tensor, TwoDimensionalTimesChain) {
    for (auto [n, d] : {std::pair{6, 3}, {8, 4}, {5, 5}, {12, 4}}) {
        const TaftParams p(n, d);
        const int m = p.m();
        for (int l = 2; l < d; ++l)
            EXPECT_EQ(decompose(tensor(build_module(p, 2, 0), build_module(p, l, 0))), ms(p, {{l + 1, 0}, {l - 1, -m}}));
        EXPECT_EQ(decompose(tensor(build_module(p, 2, 0), build_module(p, d, 0))), ms(p, {{d, 0}, {d, -m}}));
    }
}

TEST(Tensor, ProjectiveSquare) {
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}, {6, 6}}) {
        const TaftParams p(n, d);
        Multiset want;
        for (int s = 0; s < d; ++s) want.emplace_back(p, d, -s * p.m());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(decompose(tensor(build_module(p, d, 0), build_module(p, d, 0))), want);
    }
}

TEST(Tensor, TripleTwoDimensional) {
    for (auto [n, d] : {std::pair{8, 4}, {5, 5}, {6, 6}}) {
        const TaftParams p(n, d);
        const HModule z = build_module(p, 2, 0);
        EXPECT_EQ(decompose(tensor(tensor(z, z), z)), ms(p, {{4, 0}, {2, -p.m()}, {2, -p.m()}}));
    }
}

TEST(Tensor, Commutative) {
    std::mt19937 rng(5);
    for (auto [n, d] : {std::pair{6, 3}, {8, 4}, {6, 2}}) {
        const TaftParams p(n, d);
        for (int t = 0; t < 10; ++t) {
            const HModule a = direct_sum(p, random_multiset(p, rng, 4));
            const HModule b = direct_sum(p, random_multiset(p, rng, 4));
            EXPECT_EQ(decompose(tensor(a, b)), decompose(tensor(b, a)));
        }
    }
}

TEST(Dual, Examples) {
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {9, 3}}) {
        const TaftParams p(n, d);
        EXPECT_EQ(decompose(dual(build_module(p, 1, 0))), ms(p, {{1, 0}}));
        EXPECT_EQ(decompose(dual(build_module(p, 1, 1))), ms(p, {{1, n - 1}}));
        EXPECT_EQ(decompose(dual(build_module(p, 2, 0))), ms(p, {{2, p.m()}}));
        for (int l = 1; l <= d; ++l)
            for (int i = 0; i < n; ++i) {
                const HModule dd = dual(dual(build_module(p, l, i)));
                EXPECT_EQ(decompose(dd), ms(p, {{l, i}}));
            }
    }
}

TEST(Decompose, FixesIndecomposables) {
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {12, 4}}) {
        const TaftParams p(n, d);
        for (int l = 1; l <= d; ++l)
            for (int i = 0; i < n; ++i) EXPECT_EQ(decompose(build_module(p, l, i)), ms(p, {{l, i}}));
    }
}

TEST(Decompose, InvertsDirectSums) {
    std::mt19937 rng(7);
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}, {5, 5}}) {
        const TaftParams p(n, d);
        for (int t = 0; t < 8; ++t) {
            const Multiset parts = random_multiset(p, rng, 40);
            const HModule a = direct_sum(p, parts);
            const Multiset got = decompose(a);
            EXPECT_EQ(got, parts);
            int total = 0;
            for (const auto& x : got) total += x.l;
            EXPECT_EQ(static_cast<std::size_t>(total), a.dim());
        }
    }
}

TEST(Decompose, InvariantUnderChangeOfBasis) {
    std::mt19937 rng(11);
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}}) {
        const TaftParams p(n, d);
        for (int t = 0; t < 4; ++t) {
            const Multiset parts = random_multiset(p, rng, 8);
            const HModule a = direct_sum(p, parts);
            const CycMatrix s = random_invertible(n, a.dim(), rng);
            const auto s_inv = inverse(s);
            ASSERT_TRUE(s_inv.has_value());
            const HModule conj(p, (s * a.g() * *s_inv).canonical(), (s * a.h() * *s_inv).canonical());
            EXPECT_EQ(decompose(conj), parts);
        }
    }
}

TEST(Decompose, AgreesWithRankFormula) {
    std::mt19937 rng(13);
    for (auto [n, d] : {std::pair{4, 2}, {6, 3}, {8, 4}, {9, 3}, {5, 5}}) {
        const TaftParams p(n, d);
        for (int t = 0; t < 6; ++t) {
            const HModule a = direct_sum(p, random_multiset(p, rng, 3));
            const HModule b = direct_sum(p, random_multiset(p, rng, 3));
            const HModule ab = tensor(a, b);
            EXPECT_EQ(decompose(ab), rank_oracle(ab));
        }
    }
}

TEST(Decompose, RejectsNonDiagonalizableG) {
    const TaftParams p(4, 2);
    CycMatrix g = CycMatrix::identity(4, 2);
    g(0, 1) = CycNum::one(4);  // unipotent, g^4 != 1
    EXPECT_THROW(HModule(p, g, CycMatrix(4, 2, 2)), std::invalid_argument);
}
