#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbf/enumeration.hpp"

namespace cbf {

enum class TableId { SSizes = 1, ExpandedSizes = 2 };

struct TableCell {
    int n = 0;
    int k = 0;
    std::optional<Count> closed;
    std::optional<Count> enumerated;
    /// Published value for q = 2, verbatim (including known misprints).
    std::optional<Count> golden;
    /// All present values coincide; unset when fewer than two are present.
    std::optional<bool> agree;
    /// Non-empty for an annotated cell whose computed value differs from the printed one.
    std::string erratum;

    [[nodiscard]] std::optional<Count> computed() const { return closed ? closed : enumerated; }
};

struct CardinalityTables {
    int q = 2;
    std::vector<TableCell> s_sizes;        // |S^{(k)}(n)|
    std::vector<TableCell> expanded_sizes; // |S^{(k)}(n) u U^{(t)}(n)|

    /// Every cell agrees, except cells carrying an erratum annotation.
    [[nodiscard]] bool consistent() const;
};

/// Printed values for 5 <= n <= 17, ceil(n/2) <= k <= n-2, q = 2.
[[nodiscard]] std::optional<Count> golden_value(TableId table, int n, int k);
/// Cells whose printed value is known to be suspect.
[[nodiscard]] bool has_erratum_annotation(TableId table, int n, int k);

/**
 * Both cardinality tables for 5 <= n <= 17, ceil(n/2) <= k <= n-2 with
 * I = {0}. Enumerated values are omitted for cells whose q^n exceeds the
 * guard. Cells are computed independently (in parallel when requested).
 */
[[nodiscard]] CardinalityTables reproduce_tables(int q, const ScanOptions& options = {});

[[nodiscard]] std::string render_markdown(const CardinalityTables& tables);
/// Columns n,k,closed,enumerated,golden,agree,erratum; one block per table, each under a `# <table>` line.
[[nodiscard]] std::string render_csv(const CardinalityTables& tables);
/// Array of cell records, each tagged with its table.
[[nodiscard]] std::string render_json(const CardinalityTables& tables);

} // namespace cbf
