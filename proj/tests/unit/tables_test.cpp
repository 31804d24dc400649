#include <gtest/gtest.h>

#include <string>

#include "cbf/constructions.hpp"
#include "cbf/tables.hpp"

using namespace cbf;

namespace {

const TableCell* find(const std::vector<TableCell>& cells, int n, int k) {
    for (const auto& c : cells)
        if (c.n == n && c.k == k) return &c;
    return nullptr;
}

}  // namespace

TEST(Golden, EmbeddedValues) {
    EXPECT_EQ(golden_value(TableId::SSizes, 14, 8), 16);
    EXPECT_EQ(golden_value(TableId::ExpandedSizes, 16, 12), 615);
    EXPECT_EQ(golden_value(TableId::ExpandedSizes, 6, 4), 2);
    EXPECT_FALSE(golden_value(TableId::SSizes, 18, 9));
    EXPECT_FALSE(golden_value(TableId::SSizes, 9, 8));
    EXPECT_TRUE(has_erratum_annotation(TableId::ExpandedSizes, 6, 4));
    EXPECT_FALSE(has_erratum_annotation(TableId::SSizes, 6, 4));
}

TEST(Reproduce, BinaryTables) {
    const auto tables = reproduce_tables(2);
    EXPECT_TRUE(tables.consistent());
    EXPECT_EQ(tables.s_sizes.size(), tables.expanded_sizes.size());

    const auto* e64 = find(tables.expanded_sizes, 6, 4);
    ASSERT_NE(e64, nullptr);
    EXPECT_EQ(e64->computed(), 3);
    EXPECT_EQ(e64->golden, 2);
    EXPECT_EQ(e64->erratum, "computed 3, printed 2");
    EXPECT_EQ(build_expanded(Bipartition::classic(2), 6, 4).size(), 3U);

    const auto* e1511 = find(tables.expanded_sizes, 15, 11);
    ASSERT_NE(e1511, nullptr);
    EXPECT_EQ(e1511->computed(), 320);

    for (const auto& cell : tables.s_sizes) {
        EXPECT_EQ(cell.computed(), cell.golden) << cell.n << "," << cell.k;
        EXPECT_TRUE(cell.erratum.empty());
    }
    for (const auto& cell : tables.expanded_sizes) {
        if (cell.n == 6 && cell.k == 4) continue;
        EXPECT_EQ(cell.computed(), cell.golden) << cell.n << "," << cell.k;
    }
}

TEST(Reproduce, ThreadCountDoesNotChangeOutput) {
    const auto serial = render_csv(reproduce_tables(2, ScanOptions{1U << 16, 1}));
    EXPECT_EQ(render_csv(reproduce_tables(2, ScanOptions{1U << 16, 4})), serial);
}

TEST(Reproduce, TernaryHasNoGolden) {
    const auto tables = reproduce_tables(3, ScanOptions{1U << 12, 1});
    EXPECT_TRUE(tables.consistent());
    for (const auto& cell : tables.s_sizes) EXPECT_FALSE(cell.golden);
}

TEST(Render, Markdown) {
    const std::string md = render_markdown(reproduce_tables(2));
    EXPECT_NE(md.find("| 13 |  |  |  |  | 16 | 8 | 4 | 2 | 1 |"), std::string::npos);
    EXPECT_NE(md.find("(6,4) erratum: computed 3, printed 2"), std::string::npos);
}

TEST(Render, CsvAndJson) {
    const auto tables = reproduce_tables(2);
    const std::string csv = render_csv(tables);
    EXPECT_NE(csv.find("n,k,closed,enumerated,golden,agree,erratum"), std::string::npos);
    EXPECT_NE(csv.find("6,4,3,3,2,false,\"computed 3, printed 2\""), std::string::npos);
    const std::string json = render_json(tables);
    EXPECT_NE(json.find("\"table\": \"expanded\""), std::string::npos);
    EXPECT_NE(json.find("\"golden\": 1433"), std::string::npos);
}
