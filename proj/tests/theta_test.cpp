#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "bh/bh_limit.hpp"
#include "bh/bh_system.hpp"
#include "bh/dilator_lib.hpp"
#include "bh/errors.hpp"
#include "bh/syntax.hpp"

using namespace bh;

namespace {

// Brute-force order on omega^X terms. A token w[i0,...] over support s_0 < ... < s_k
// denotes the descending sequence s_{i0}, s_{i1}, ...; bodies compare
// lexicographically, then the two clauses decide. Iota is the identity on
// term trees, which the stage tests below confirm separately.
std::strong_ordering omega_oracle(Term s, Term t) {
    if (s == t) return std::strong_ordering::equal;
    auto seq = [](Term u) {
        std::vector<Term> out;
        for (std::size_t i : u.token().entries()) out.push_back(u.support()[i]);
        return out;
    };
    const auto a = seq(s), b = seq(t);
    std::strong_ordering body = std::strong_ordering::equal;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()) && body == 0; ++i) body = omega_oracle(a[i], b[i]);
    if (body == 0) body = a.size() <=> b.size();
    const bool s_lower = body < 0;
    const Term lo = s_lower ? s : t, hi = s_lower ? t : s;
    for (Term x : lo.support())
        if (omega_oracle(x, hi) >= 0) return s_lower ? std::strong_ordering::greater : std::strong_ordering::less;
    return s_lower ? std::strong_ordering::less : std::strong_ordering::greater;
}

// Successor terms of height exactly n: th(top) and th(v0;t), by brute force.
std::vector<std::string> successor_trees(std::size_t max_height) {
    std::vector<std::string> out;
    std::string t = "th(top)";
    for (std::size_t h = 1; h <= max_height; ++h) {
        out.push_back(t);
        t = "th(v0;" + t + ")";
    }
    return out;
}

}  // namespace

TEST(ThetaLength, Examples) {
    StageTower omega(make_omega_power());
    const BHSystem& X1 = omega.stage(1);
    const Term a = parse_term("th(w[])", omega.store());
    EXPECT_EQ(theta_length(X1, {{}, Token::seq({})}), 1u);
    EXPECT_EQ(theta_length(X1, {{a}, Token::seq({0, 0})}), 2u);

    StageTower succ(make_successor());
    const Term top = parse_term("th(top)", succ.store());
    EXPECT_EQ(succ.stage(1).length(top), 1u);
    EXPECT_EQ(theta_length(succ.stage(1), {{top}, Token::var(0)}), 2u);
}

TEST(Collapse, Examples) {
    StageTower succ(make_successor());
    const BHSystem& X1 = succ.stage(1);
    const Term top = collapse(succ.stage(0), {{}, Token::top()});
    EXPECT_EQ(format_term(top), "th(top)");
    EXPECT_EQ(top.length(), 1u);
    const Term next = collapse(X1, {{top}, Token::var(0)});
    EXPECT_EQ(next.length(), 2u);
    EXPECT_EQ(succ.stage(2).length(next), 2u);
    // formal terms: distinct bodies give distinct terms, equal bodies the same node
    EXPECT_FALSE(top == next);
    EXPECT_TRUE(collapse(X1, {{top}, Token::var(0)}) == next);
}

TEST(EmbedNext, Examples) {
    StageTower omega(make_omega_power());
    const BHSystem& X1 = omega.stage(1);
    const Term a = parse_term("th(w[])", omega.store());
    EXPECT_TRUE(embed_next(omega.stage(0), a) == a);
    EXPECT_EQ(omega.stage(2).length(a), 1u);
    const Term s = parse_term("th(w[0];th(w[]))", omega.store());
    ASSERT_TRUE(omega.stage(2).contains(s));
    const Term is = omega.stage(2).embed(s);
    EXPECT_EQ(format_term(is), "th(w[0];th(w[]))");
    EXPECT_EQ(omega.stage(3).length(is), omega.stage(2).length(s));
    EXPECT_TRUE(X1.embed(a) == a);
}

TEST(Stages, SuccessorSizesMatchBruteForce) {
    StageTower succ(make_successor());
    EXPECT_TRUE(succ.stage(0).enumerate(10).items.empty());
    const auto trees = successor_trees(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto got = succ.stage(n).enumerate(100);
        EXPECT_TRUE(got.exhaustive);
        ASSERT_EQ(got.items.size(), n);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(format_term(got.items[i]), trees[i]);
    }
}

TEST(Stages, OmegaFirstStages) {
    StageTower omega(make_omega_power());
    const auto x1 = omega.stage(1).enumerate(10);
    ASSERT_EQ(x1.items.size(), 1u);
    EXPECT_TRUE(x1.exhaustive);
    EXPECT_EQ(format_term(x1.items[0]), "th(w[])");

    const auto x2 = omega.stage(2).enumerate(5);
    EXPECT_FALSE(x2.exhaustive);
    const std::vector<std::string> chain{"th(w[])", "th(w[0];th(w[]))", "th(w[0,0];th(w[]))",
                                         "th(w[0,0,0];th(w[]))", "th(w[0,0,0,0];th(w[]))"};
    ASSERT_EQ(x2.items.size(), chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) EXPECT_EQ(format_term(x2.items[i]), chain[i]);
}

TEST(ThetaCompare, HandEvaluatedExamples) {
    StageTower omega(make_omega_power());
    const BHSystem& X1 = omega.stage(1);
    auto term = [&](const char* s) { return parse_term(s, omega.store()); };
    const Term e = term("th(w[])"), a1 = term("th(w[0];th(w[]))"), a2 = term("th(w[0,0];th(w[]))"),
               a3 = term("th(w[0,0,0];th(w[]))");
    EXPECT_EQ(theta_compare(X1, e, e), std::strong_ordering::equal);
    // body <> < <a>, empty support: clause (i) holds vacuously
    ComparisonTrace trace;
    EXPECT_EQ(theta_compare(X1, e, a1, &trace), std::strong_ordering::less);
    ASSERT_EQ(trace.steps.size(), 2u);
    EXPECT_EQ(trace.steps[0], "body(th(w[])) < body(th(w[0];th(w[])))");
    EXPECT_EQ(trace.steps[1], "  clause (i): th(w[]) < th(w[0];th(w[]))");

    // <a> < <a,a>; iota(a) = a = th(w[]) < th(w[0,0];a), so clause (i)
    trace.steps.clear();
    EXPECT_EQ(theta_compare(X1, a1, a2, &trace), std::strong_ordering::less);
    EXPECT_NE(std::find(trace.steps.begin(), trace.steps.end(), "  iota(th(w[])) LT th(w[0,0];th(w[]))"),
              trace.steps.end());
    EXPECT_EQ(trace.steps.back(), "  clause (i): th(w[0];th(w[])) < th(w[0,0];th(w[]))");
    EXPECT_EQ(theta_compare(X1, a2, a3), std::strong_ordering::less);
    EXPECT_EQ(theta_compare(X1, a3, a1), std::strong_ordering::greater);

    StageTower succ(make_successor());
    const Term top = parse_term("th(top)", succ.store()), v = parse_term("th(v0;th(top))", succ.store());
    // body v0 < top, iota(th(top)) = th(top) is not below th(top): clause (ii)
    trace.steps.clear();
    EXPECT_EQ(theta_compare(succ.stage(1), top, v, &trace), std::strong_ordering::less);
    EXPECT_EQ(trace.steps.back(), "  clause (ii): th(top) < th(v0;th(top))");
}

TEST(ThetaCompare, MemoizedAgreesWithOracle) {
    StageTower omega(make_omega_power());
    for (std::size_t n = 1; n <= 3; ++n) {
        const ThetaSystem& X = omega.theta_stage(n);
        const auto terms = X.enumerate(40).items;
        for (Term s : terms) {
            for (Term t : terms) {
                const auto expected = omega_oracle(s, t);
                EXPECT_EQ(X.compare(s, t), expected) << format_term(s) << " vs " << format_term(t);
                EXPECT_EQ(theta_compare(X.base(), s, t), expected);
            }
        }
        EXPECT_GT(X.memo_size(), 0u);
    }
}

TEST(Contains, RejectsIllFormedTerms) {
    StageTower omega(make_omega_power());
    const ThetaSystem& X2 = omega.theta_stage(1);
    auto term = [&](const char* s) { return parse_term(s, omega.store()); };
    EXPECT_TRUE(X2.contains(term("th(w[0,0];th(w[]))")));
    // not full support, index out of range, support not in the base, unsorted support
    EXPECT_FALSE(X2.contains(term("th(w[];th(w[]))")));
    EXPECT_FALSE(X2.contains(term("th(w[1];th(w[]))")));
    EXPECT_FALSE(X2.contains(term("th(w[0];th(w[0];th(w[])))")));
    const ThetaSystem& X3 = omega.theta_stage(2);
    EXPECT_TRUE(X3.contains(term("th(w[1,0];th(w[]),th(w[0];th(w[])))")));
    EXPECT_FALSE(X3.contains(term("th(w[1,0];th(w[0];th(w[])),th(w[]))")));
}

TEST(SubtermClosure, Examples) {
    StageTower succ(make_successor());
    const ThetaSystem& X2 = succ.theta_stage(1);
    const Term top = parse_term("th(top)", succ.store()), v = parse_term("th(v0;th(top))", succ.store());
    EXPECT_EQ(subterm_closure(X2, top), (std::vector<Term>{top}));
    EXPECT_EQ(subterm_closure(X2, v), (std::vector<Term>{top, v}));

    StageTower omega(make_omega_power());
    const ThetaSystem& X3 = omega.theta_stage(2);
    for (Term s : X3.enumerate(30).items) {
        const auto closure = subterm_closure(X3, s);
        EXPECT_TRUE(closure.back() == s);
        for (Term r : closure) {
            for (Term q : subterm_closure(X3, r))
                EXPECT_NE(std::find(closure.begin(), closure.end(), q), closure.end());
        }
    }
}

TEST(Iterate, EmptyBase) {
    auto T = make_omega_power();
    auto store = std::make_shared<TermStore>();
    auto empty = std::make_shared<const EmptySystem>(T, store);
    auto X1 = iterate(empty, "X_1");
    const auto items = X1->enumerate(10);
    ASSERT_EQ(items.items.size(), 1u);
    EXPECT_EQ(format_term(items.items[0]), "th(w[])");
    EXPECT_EQ(X1->describe(), "X_1");
    EXPECT_FALSE(empty->embed_preimage(items.items[0]).has_value());
    EXPECT_TRUE(empty->enumerate(5).items.empty());

    auto X2 = iterate(X1);
    EXPECT_EQ(X2->describe(), "theta(X_1)");
    auto succ = iterate(iterate(std::make_shared<const EmptySystem>(make_successor(), store)));
    EXPECT_EQ(succ->enumerate(10).items.size(), 2u);
}
