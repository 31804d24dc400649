#include <gtest/gtest.h>

#include <set>
#include <string>

#include "cbf/errors.hpp"
#include "cbf/words.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cbf;
using testing_support::strings;
using testing_support::w;

TEST(Bipartition, ValidatesClasses) {
    EXPECT_THROW(Bipartition(2, std::span<const Symbol>{}), InvalidInput);
    EXPECT_THROW(Bipartition(2, {0, 1}), InvalidInput);
    EXPECT_THROW(Bipartition(3, {3}), InvalidInput);
    EXPECT_THROW(Bipartition(1, {0}), InvalidInput);
    EXPECT_THROW(Bipartition(65, {0}), InvalidInput);

    const Bipartition bip(4, {0, 2});
    EXPECT_EQ(bip.size_i(), 2);
    EXPECT_EQ(bip.size_j(), 2);
    EXPECT_TRUE(bip.in_i(2));
    EXPECT_TRUE(bip.in_j(3));
    EXPECT_FALSE(bip.in_j(4));
    EXPECT_EQ(bip.j_symbols(), (std::vector<Symbol>{1, 3}));
    EXPECT_EQ(Bipartition::classic(3), Bipartition(3, {0}));
}

TEST(Prefixes, ListsProperPrefixesShortestFirst) {
    EXPECT_EQ(strings(prefixes(w("00101"))), (std::set<std::string>{"0", "00", "001", "0010"}));
    EXPECT_EQ(strings(prefixes(w("10"))), (std::set<std::string>{"1"}));
    EXPECT_EQ(prefixes(w("0001001")).size(), 6U);
    EXPECT_THROW((void)prefixes(w("0")), InvalidInput);
}

TEST(Suffixes, ListsProperSuffixesShortestFirst) {
    EXPECT_EQ(strings(suffixes(w("00101"))), (std::set<std::string>{"1", "01", "101", "0101"}));
    EXPECT_EQ(strings(suffixes(w("10"))), (std::set<std::string>{"0"}));
    const auto s = suffixes(w("0001001"));
    ASSERT_EQ(s.size(), 6U);
    EXPECT_EQ(s.front(), w("1"));
    EXPECT_EQ(s.back(), w("001001"));
}

TEST(BifixFree, KnownWords) {
    EXPECT_TRUE(is_bifix_free(w("0001001")));
    EXPECT_FALSE(is_bifix_free(w("0010001")));
    EXPECT_EQ(shortest_bifix(w("0010001").view()), 3U);
    for (int n = 2; n <= 8; ++n) EXPECT_FALSE(is_bifix_free(Word(std::vector<Symbol>(n, 1))));
    EXPECT_THROW((void)is_bifix_free(w("1")), InvalidInput);
}

TEST(BifixFree, AgreesWithOracle) {
    for (int q : {2, 3}) {
        for (int n = 2; n <= (q == 2 ? 10 : 6); ++n) {
            for (const auto& text : oracle::all_words(q, n)) {
                EXPECT_EQ(is_bifix_free(w(text, q)), oracle::bifix_free(text)) << text;
            }
        }
    }
}

TEST(CodeFree, WindowScan) {
    EXPECT_TRUE(is_code_free(w("10001").view(), std::vector<Word>{w("0000")}));
    EXPECT_FALSE(is_code_free(w("10001").view(), std::vector<Word>{w("000")}));
    EXPECT_FALSE(is_code_free(w("010010").view(), std::vector<Word>{w("00")}));
    EXPECT_TRUE(is_code_free(w("01").view(), std::vector<Word>{w("000")}));
    EXPECT_THROW((void)is_code_free(w("01").view(), std::vector<Word>{}), InvalidInput);
    EXPECT_THROW((void)is_code_free(w("01").view(), std::vector<Word>{w("0"), w("00")}), InvalidInput);
}

TEST(BlockFree, Examples) {
    const auto bip = Bipartition::classic(2);
    EXPECT_TRUE(is_block_free(w("0101").view(), bip, 2));
    EXPECT_FALSE(is_block_free(w("1001").view(), bip, 2));
    EXPECT_TRUE(is_block_free(w("0").view(), bip, 2));
    EXPECT_TRUE(is_block_free(Word{}.view(), bip, 1));
    EXPECT_THROW((void)is_block_free(w("01").view(), bip, 0), InvalidInput);
}

// I^k-freeness equals freeness of the materialized code I^k.
TEST(BlockFree, MatchesMaterializedRunCode) {
    const std::vector<Bipartition> splits{Bipartition(2, {0}), Bipartition(3, {0}), Bipartition(3, {0, 2})};
    for (const auto& bip : splits) {
        const int q = bip.q();
        const int max_len = q == 2 ? 10 : 7;
        for (int k = 1; k <= 4; ++k) {
            std::vector<Word> runs;
            for (const auto& text : oracle::all_words(q, k)) {
                const Word cand = w(text, q);
                bool all_i = true;
                for (auto s : cand.symbols()) all_i = all_i && bip.in_i(s);
                if (all_i) runs.push_back(cand);
            }
            EXPECT_TRUE(is_block_free(Word{}.view(), bip, k));
            for (int len = 1; len <= max_len; ++len) {
                for (const auto& text : oracle::all_words(q, len)) {
                    const Word word = w(text, q);
                    EXPECT_EQ(is_block_free(word.view(), bip, k), is_code_free(word.view(), runs)) << text << " k=" << k;
                }
            }
        }
    }
}

// Allowing longer runs can only admit more words.
TEST(BlockFree, MonotoneInK) {
    const auto bip = Bipartition::classic(2);
    for (int len = 1; len <= 10; ++len) {
        for (const auto& text : oracle::all_words(2, len)) {
            const Word word = w(text);
            for (int k = 1; k < 6; ++k) {
                if (is_block_free(word.view(), bip, k)) EXPECT_TRUE(is_block_free(word.view(), bip, k + 1)) << text;
            }
        }
    }
}

TEST(Word, OrderingAndViews) {
    EXPECT_LT(w("0011"), w("0101"));
    EXPECT_TRUE(less(w("001").view(), w("0010").view()));
    EXPECT_TRUE(equal(w("0101").prefix(2), w("0101").suffix(2)));
    EXPECT_TRUE(w("012", 3).fits_alphabet(3));
    EXPECT_FALSE(w("012", 3).fits_alphabet(2));
    std::size_t count = 0;
    for (auto view : prefix_views(w("00101").view())) count += view.size();
    EXPECT_EQ(count, 1U + 2U + 3U + 4U);
}
