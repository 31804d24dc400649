#include <gtest/gtest.h>

#include "cbf/constructions.hpp"
#include "cbf/enumeration.hpp"
#include "cbf/errors.hpp"
#include "oracle.hpp"

using namespace cbf;

namespace {

oracle::Split split_of(const Bipartition& bip) {
    std::string i;
    for (auto s : bip.i_symbols()) i += static_cast<char>('0' + s);
    return {bip.q(), i};
}

}  // namespace

TEST(SizeS, ClosedForm) {
    const auto bip = Bipartition::classic(2);
    EXPECT_EQ(size_S_closed(bip, 17, 9), 64);
    EXPECT_EQ(size_S_closed(bip, 17, 15), 1);
    EXPECT_EQ(size_S_closed(bip, 17, 16), 1);
    EXPECT_EQ(size_S_closed(Bipartition(3, {0}), 8, 4), 36);
    EXPECT_THROW((void)size_S_closed(bip, 9, 4), NotApplicable);
    EXPECT_THROW((void)size_S_closed(bip, 9, 9), InvalidInput);
}

TEST(SizeS, MatchesOracleCount) {
    for (const auto& bip : {Bipartition(2, {0}), Bipartition(3, {0}), Bipartition(3, {0, 1}), Bipartition(4, {1})}) {
        const int max_n = bip.q() == 2 ? 12 : (bip.q() == 3 ? 8 : 6);
        for (int n = 2; n <= max_n; ++n) {
            for (int k = (n + 1) / 2; k < n; ++k) {
                EXPECT_EQ(size_S_closed(bip, n, k), oracle::s_code(split_of(bip), n, k).size()) << n << "," << k;
            }
        }
    }
}

TEST(SizeV, ClosedForm) {
    const auto bip = Bipartition::classic(2);
    EXPECT_EQ(size_V_closed(bip, 9, 6), 16);
    EXPECT_EQ(size_V_closed(bip, 9, 7), 16);
    EXPECT_EQ(size_V_closed(bip, 7, 5), 4);
    for (const auto& b : {Bipartition(2, {0}), Bipartition(3, {0}), Bipartition(3, {1, 2})}) {
        const int max_n = b.q() == 2 ? 12 : 8;
        for (int n = 7; n <= max_n; ++n)
            for (int k = (n + 1) / 2; k <= n - 2; ++k)
                EXPECT_EQ(size_V_closed(b, n, k), oracle::v_code(split_of(b), n, k, n).size()) << n << "," << k;
    }
}

TEST(Branch, Classification) {
    EXPECT_EQ(classify_u_branch(7, 4), UBranch::Case1);
    EXPECT_EQ(classify_u_branch(11, 7), UBranch::Case2Boundary);
    EXPECT_EQ(classify_u_branch(9, 6), UBranch::Case2Interior);
    EXPECT_EQ(classify_u_branch(10, 7), UBranch::Case3Recurrence);
    EXPECT_EQ(classify_u_branch(9, 7), UBranch::Case4KnMinus2);
    EXPECT_EQ(classify_u_branch(7, 5), UBranch::SpecialN7K5);
    EXPECT_EQ(classify_u_branch(9, 4), UBranch::NotApplicable);
    EXPECT_EQ(classify_u_branch(6, 4), UBranch::NotApplicable);
    EXPECT_EQ(to_string(UBranch::Case4KnMinus2), "case4-k=n-2");
    // every (n, k) in the regime lands on a formula
    for (int n = 7; n <= 60; ++n)
        for (int k = (n + 1) / 2; k <= n - 2; ++k) EXPECT_NE(classify_u_branch(n, k), UBranch::NotApplicable) << n << "," << k;
}

TEST(CountU, ClosedExamples) {
    const auto bip = Bipartition::classic(2);
    const struct {
        int n, k;
        long value;
        UBranch branch;
    } cases[] = {{7, 4, 1, UBranch::Case1},           {11, 7, 20, UBranch::Case2Boundary},
                 {9, 6, 9, UBranch::Case2Interior},   {10, 7, 17, UBranch::Case3Recurrence},
                 {9, 7, 10, UBranch::Case4KnMinus2},  {7, 5, 3, UBranch::SpecialN7K5}};
    for (const auto& c : cases) {
        const auto report = count_U_closed(bip, c.n, c.k);
        ASSERT_TRUE(report.closed_form);
        EXPECT_EQ(*report.closed_form, c.value) << c.n << "," << c.k;
        EXPECT_EQ(report.branch, c.branch);
        EXPECT_EQ(count_U_enumerate(bip, c.n, c.k), c.value);
    }
    EXPECT_THROW((void)count_U_closed(bip, 9, 4), NotApplicable);
    EXPECT_THROW((void)count_U_closed(bip, 6, 3), NotApplicable);
    EXPECT_THROW((void)count_U_closed(bip, 9, 10), InvalidInput);
}

// Closed form against the string oracle, independent of the library's U builder.
TEST(CountU, ClosedMatchesOracle) {
    for (const auto& bip : {Bipartition(2, {0}), Bipartition(3, {0}), Bipartition(3, {0, 2}), Bipartition(4, {0, 1})}) {
        const int max_n = bip.q() == 2 ? 13 : (bip.q() == 3 ? 9 : 8);
        for (int n = 7; n <= max_n; ++n) {
            for (int k = (n + 1) / 2; k <= n - 2; ++k) {
                oracle::UFamily fam(split_of(bip), n, k);
                const auto report = count_U_closed(bip, n, k);
                EXPECT_EQ(*report.closed_form, fam.u(n).size()) << bip.q() << " " << n << "," << k;
            }
        }
    }
}

TEST(CountU, BothMethodsAgree) {
    const auto report = count_U(Bipartition::classic(2), 12, 8, CountMethod::Both);
    ASSERT_TRUE(report.agree);
    EXPECT_TRUE(*report.agree);
    EXPECT_EQ(*report.closed_form, *report.enumerated);
    const auto only = count_U(Bipartition::classic(2), 12, 8, CountMethod::Closed);
    EXPECT_FALSE(only.enumerated);
    EXPECT_FALSE(only.agree);
}

TEST(CountU, ClosedMatchesConstructionLonger) {
    for (int n = 14; n <= 19; ++n)
        for (int k = (n + 1) / 2; k <= n - 2; ++k)
            EXPECT_EQ(*count_U_closed(Bipartition::classic(2), n, k).closed_form,
                      count_U_enumerate(Bipartition::classic(2), n, k))
                << n << "," << k;
    for (int k = 6; k <= 9; ++k)
        EXPECT_EQ(*count_U_closed(Bipartition(4, {0, 3}), 11, k).closed_form, count_U_enumerate(Bipartition(4, {0, 3}), 11, k));
}

TEST(CountU, LargeParametersStayExact) {
    const Bipartition bip(5, {0, 1});
    const auto report = count_U_closed(bip, 40, 30);
    ASSERT_TRUE(report.closed_form);
    EXPECT_GT(*report.closed_form, Count(0));
    EXPECT_LT(*report.closed_form, size_V_closed(bip, 40, 30) + 1);
}

TEST(CountExpanded, Examples) {
    const auto bip = Bipartition::classic(2);
    EXPECT_EQ(count_expanded(bip, 17, 15), 1433);
    EXPECT_EQ(count_expanded(bip, 12, 6), 31);
    EXPECT_EQ(count_expanded(bip, 14, 10), 166);
    EXPECT_EQ(count_expanded(bip, 5, 3), 2);
    EXPECT_EQ(count_expanded(bip, 6, 3), 3);
    EXPECT_EQ(count_expanded(bip, 9, 3), build_S(bip, 9, 3).size());
    for (int n = 4; n <= 11; ++n)
        for (int k = 1; k < n; ++k) EXPECT_EQ(count_expanded(bip, n, k), build_expanded(bip, n, k).size()) << n << "," << k;
}
