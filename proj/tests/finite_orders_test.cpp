#include <gtest/gtest.h>

#include <string>

#include "bh/finite_orders.hpp"

using namespace bh;

namespace {

auto nat_cmp = [](std::size_t a, std::size_t b) { return a <=> b; };

}  // namespace

TEST(Embedding, Identity) {
    EXPECT_TRUE(identity_embedding(0).images().empty());
    EXPECT_EQ(identity_embedding(3).images(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(identity_embedding(1).images(), (std::vector<std::size_t>{0}));
    EXPECT_TRUE(identity_embedding(3).is_identity());
}

TEST(Embedding, RejectsNonIncreasing) {
    EXPECT_THROW(Embedding(3, {1, 1}), std::invalid_argument);
    EXPECT_THROW(Embedding(3, {2, 0}), std::invalid_argument);
    EXPECT_THROW(Embedding(2, {0, 2}), std::invalid_argument);
}

TEST(Embedding, Compose) {
    const Embedding f(3, {0, 2}), g(4, {0, 1, 3});
    EXPECT_EQ(compose(f, g), Embedding(4, {0, 3}));
    EXPECT_EQ(compose(identity_embedding(3), Embedding(5, {1, 2, 4})), Embedding(5, {1, 2, 4}));
    const Embedding empty_in_5 = compose(Embedding(0, {}), Embedding(5, {}));
    EXPECT_EQ(empty_in_5.domain_size(), 0u);
    EXPECT_EQ(empty_in_5.codomain_size(), 5u);
    EXPECT_THROW(compose(f, Embedding(4, {0, 1})), std::invalid_argument);
}

TEST(Embedding, AllEmbeddingsAreTheSubsets) {
    // binomial counts, lexicographic order
    EXPECT_EQ(all_embeddings(2, 4).size(), 6u);
    EXPECT_EQ(all_embeddings(0, 3).size(), 1u);
    EXPECT_EQ(all_embeddings(3, 2).size(), 0u);
    const auto es = all_embeddings(2, 3);
    ASSERT_EQ(es.size(), 3u);
    EXPECT_EQ(es[0], Embedding(3, {0, 1}));
    EXPECT_EQ(es[1], Embedding(3, {0, 2}));
    EXPECT_EQ(es[2], Embedding(3, {1, 2}));
    EXPECT_EQ(to_string(es[1]), "[0,2]:2->3");
}

TEST(Embedding, CompositionIsAssociative) {
    for (const auto& f : all_embeddings(1, 2))
        for (const auto& g : all_embeddings(2, 3))
            for (const auto& h : all_embeddings(3, 4)) EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
}

TEST(FinSubset, InclusionOf) {
    const std::vector<char> chain{'a', 'b', 'c', 'd'};
    auto cmp = [](char x, char y) { return x <=> y; };
    const std::vector<char> bd{'b', 'd'}, none{}, abc{'a', 'b', 'c'};
    EXPECT_EQ(inclusion_of<char>(bd, chain, cmp).images(), (std::vector<std::size_t>{1, 3}));
    EXPECT_TRUE(inclusion_of<char>(none, chain, cmp).images().empty());
    EXPECT_EQ(inclusion_of<char>(abc, abc, cmp), identity_embedding(3));
    const std::vector<char> missing{'e'};
    EXPECT_THROW(inclusion_of<char>(missing, chain, cmp), std::invalid_argument);
}

TEST(FinSubset, Map) {
    auto plus1 = [](std::size_t x) { return x + 1; };
    auto id = [](std::size_t x) { return x; };
    const auto s = FinSubset<std::size_t>::from_unsorted({2, 0}, nat_cmp);
    EXPECT_EQ(finset_map(plus1, s, nat_cmp).members(), (std::vector<std::size_t>{1, 3}));
    EXPECT_TRUE(finset_map(plus1, FinSubset<std::size_t>{}, nat_cmp).empty());
    const auto t = FinSubset<std::size_t>::from_sorted({5, 7});
    EXPECT_EQ(finset_map(id, t, nat_cmp), t);
}

TEST(FinSubset, FromUnsortedDeduplicates) {
    const auto s = FinSubset<std::size_t>::from_unsorted({3, 1, 3, 2}, nat_cmp);
    EXPECT_EQ(s.members(), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(FinComparison, LtFin) {
    const std::vector<std::size_t> none{}, three{3}, one_four{1, 4}, five{5}, four{4};
    EXPECT_TRUE(lt_fin(none, five, nat_cmp));
    EXPECT_TRUE(lt_fin(none, none, nat_cmp));
    EXPECT_FALSE(lt_fin(three, none, nat_cmp));
    EXPECT_TRUE(lt_fin(one_four, five, nat_cmp));
    EXPECT_FALSE(lt_fin(one_four, four, nat_cmp));
    EXPECT_TRUE(leq_fin(one_four, four, nat_cmp));
    EXPECT_TRUE(lt_fin_single(one_four, std::size_t{5}, nat_cmp));
    EXPECT_FALSE(lt_fin_single(one_four, std::size_t{4}, nat_cmp));
    EXPECT_TRUE(lt_fin_single(none, std::size_t{0}, nat_cmp));
    EXPECT_TRUE(leq_fin_single(std::size_t{4}, one_four, nat_cmp));
    EXPECT_FALSE(leq_fin_single(std::size_t{5}, one_four, nat_cmp));
    EXPECT_FALSE(leq_fin_single(std::size_t{0}, none, nat_cmp));
}

TEST(FinComparison, StrictlySorted) {
    EXPECT_TRUE(is_strictly_sorted(std::vector<std::size_t>{}, nat_cmp));
    EXPECT_TRUE(is_strictly_sorted(std::vector<std::size_t>{1, 2, 5}, nat_cmp));
    EXPECT_FALSE(is_strictly_sorted(std::vector<std::size_t>{1, 1}, nat_cmp));
    EXPECT_FALSE(is_strictly_sorted(std::vector<std::size_t>{2, 1}, nat_cmp));
}
