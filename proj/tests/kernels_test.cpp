#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "bh/bh_limit.hpp"
#include "bh/dilator_lib.hpp"
#include "bh/kernels.hpp"

using namespace bh;
using namespace bh::kernels;

namespace {

std::vector<int> shuffled(std::size_t n, unsigned seed) {
    std::vector<int> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<int>(i);
    std::mt19937 rng(seed);
    std::shuffle(xs.begin(), xs.end(), rng);
    return xs;
}

}  // namespace

TEST(Kernels, OrderMatrixSerialMatchesParallel) {
    const auto xs = shuffled(60, 7);
    auto cmp = [](int a, int b) { return a <=> b; };
    const auto s = order_matrix_serial<int>(xs, cmp);
    const auto p = order_matrix_parallel<int>(xs, cmp);
    EXPECT_EQ(s, p);
    EXPECT_EQ(s.at(0, 0), 0);
    const auto lin = linearity_serial(s);
    EXPECT_EQ(lin.violations, 0u);
    EXPECT_EQ(lin.pairs, 3600u);
    EXPECT_EQ(lin.triples, 216000u);
    EXPECT_EQ(lin, linearity_parallel(s));
}

TEST(Kernels, LinearityFindsCycles) {
    // i < j iff (j - i) mod 5 in {1, 2}: a tournament without transitivity
    std::vector<int> xs{0, 1, 2, 3, 4};
    auto cyc = [](int a, int b) {
        if (a == b) return std::strong_ordering::equal;
        const int d = ((b - a) % 5 + 5) % 5;
        return d <= 2 ? std::strong_ordering::less : std::strong_ordering::greater;
    };
    const auto m = order_matrix_serial<int>(xs, cyc);
    const auto s = linearity_serial(m, 4);
    EXPECT_GT(s.violations, 0u);
    EXPECT_EQ(s.first.size(), 4u);
    EXPECT_EQ(s.first[0].kind, Violation::Transitivity);
    EXPECT_EQ(s, linearity_parallel(m, 4));
}

TEST(Kernels, LinearityFindsTiesAndAsymmetry) {
    std::vector<int> xs{0, 1, 2};
    auto bad = [](int a, int b) {
        if (a == b) return std::strong_ordering::equal;
        if (a + b == 1) return std::strong_ordering::equal;    // 0 and 1 tied
        return std::strong_ordering::less;                    // 0 < 2 and 2 < 0
    };
    const auto m = order_matrix_serial<int>(xs, bad);
    const auto r = linearity_serial(m);
    bool tie = false, anti = false;
    for (const auto& f : r.first) {
        tie = tie || f.kind == Violation::NotTrichotomous;
        anti = anti || f.kind == Violation::Antisymmetry;
    }
    EXPECT_TRUE(tie);
    EXPECT_TRUE(anti);
    EXPECT_EQ(r, linearity_parallel(m));
}

TEST(Kernels, ParallelRethrows) {
    std::vector<int> xs{0, 1, 2, 3};
    auto throwing = [](int a, int b) -> std::strong_ordering {
        if (a == 2 && b == 3) throw std::runtime_error("boom");
        return a <=> b;
    };
    EXPECT_THROW(order_matrix_parallel<int>(xs, throwing), std::runtime_error);
    EXPECT_THROW(order_matrix_serial<int>(xs, throwing), std::runtime_error);
}

TEST(Kernels, CheckPairs) {
    auto pred = [](std::size_t i, std::size_t j) {
        if (i == 3 && j == 1) throw std::runtime_error("thrown");
        return (i + j) % 7 != 0;
    };
    const auto s = check_pairs_serial(20, pred, 5);
    const auto p = check_pairs_parallel(20, pred, 5);
    EXPECT_EQ(s, p);
    EXPECT_EQ(s.checked, 400u);
    EXPECT_EQ(s.first.size(), 5u);
    EXPECT_EQ(s.first[0].i, 0u);
    EXPECT_EQ(s.first[0].j, 0u);
    std::size_t expected = 1;  // the throwing pair
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 20; ++j) expected += (i + j) % 7 == 0 && !(i == 3 && j == 1);
    EXPECT_EQ(s.failures, expected);
}

TEST(Kernels, ThetaOrderSerialMatchesParallel) {
    StageTower omega(make_omega_power());
    const auto& X = omega.stage(3);
    const auto items = X.enumerate(40).items;
    const auto s = order_matrix_serial<Term>(items, X.comparator());
    const auto p = order_matrix_parallel<Term>(items, X.comparator());
    EXPECT_EQ(s, p);
    EXPECT_EQ(linearity_serial(s).violations, 0u);
}
