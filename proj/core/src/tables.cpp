#include "cbf/tables.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace cbf {

namespace {

constexpr int kMinN = 5;
constexpr int kMaxN = 17;

// Row n lists k = ceil(n/2) .. n-2.
const std::map<int, std::vector<int>> kGoldenS = {
    {5, {1}},
    {6, {2, 1}},
    {7, {2, 1}},
    {8, {4, 2, 1}},
    {9, {4, 2, 1}},
    {10, {8, 4, 2, 1}},
    {11, {8, 4, 2, 1}},
    {12, {16, 8, 4, 2, 1}},
    {13, {16, 8, 4, 2, 1}},
    {14, {32, 16, 8, 4, 2, 1}},
    {15, {32, 16, 8, 4, 2, 1}},
    {16, {64, 32, 16, 8, 4, 2, 1}},
    {17, {64, 32, 16, 8, 4, 2, 1}},
};

const std::map<int, std::vector<int>> kGoldenExpanded = {
    {5, {2}},
    {6, {3, 2}},
    {7, {3, 4}},
    {8, {7, 6, 6}},
    {9, {9, 11, 11}},
    {10, {15, 12, 19, 19}},
    {11, {21, 24, 34, 35}},
    {12, {31, 32, 45, 59, 64}},
    {13, {45, 52, 89, 107, 119}},
    {14, {63, 72, 104, 166, 198, 221}},
    {15, {93, 124, 201, 320, 371, 412}},
    {16, {127, 152, 224, 397, 615, 699, 768}},
    {17, {189, 268, 448, 794, 1173, 1314, 1433}},
};

struct Annotation {
    TableId table;
    int n;
    int k;
};

// The printed n=6, k=4 entry does not match the size of the code it describes.
constexpr Annotation kAnnotations[] = {{TableId::ExpandedSizes, 6, 4}};

int first_k(int n) { return (n + 1) / 2; }

std::string str(const std::optional<Count>& c) { return c ? c->str() : std::string(); }

void settle(TableCell& cell, TableId table) {
    std::vector<Count> values;
    for (const auto* v : {&cell.closed, &cell.enumerated, &cell.golden}) {
        if (*v) values.push_back(**v);
    }
    if (values.size() >= 2) {
        cell.agree = std::all_of(values.begin(), values.end(), [&](const Count& v) { return v == values.front(); });
    }
    const auto computed = cell.computed();
    if (cell.golden && computed && *computed != *cell.golden && has_erratum_annotation(table, cell.n, cell.k)) {
        cell.erratum = "computed " + computed->str() + ", printed " + cell.golden->str();
    }
}

TableCell s_cell(const Bipartition& bip, int n, int k, const ScanOptions& options) {
    TableCell cell{n, k, size_S_closed(bip, n, k), std::nullopt, std::nullopt, std::nullopt, {}};
    if (space_size(bip.q(), static_cast<std::size_t>(n)) <= options.guard) {
        cell.enumerated = Count(build_S(bip, n, k, options).size());
    }
    if (bip.q() == 2) cell.golden = golden_value(TableId::SSizes, n, k);
    settle(cell, TableId::SSizes);
    return cell;
}

TableCell expanded_cell(const Bipartition& bip, int n, int k, const ScanOptions& options) {
    TableCell cell{n, k, count_expanded(bip, n, k, options), std::nullopt, std::nullopt, std::nullopt, {}};
    if (space_size(bip.q(), static_cast<std::size_t>(n)) <= options.guard) {
        cell.enumerated = Count(build_expanded(bip, n, k, options).size());
    }
    if (bip.q() == 2) cell.golden = golden_value(TableId::ExpandedSizes, n, k);
    settle(cell, TableId::ExpandedSizes);
    return cell;
}

std::string table_title(TableId table, int q) {
    const std::string qs = std::to_string(q);
    return table == TableId::SSizes ? "|S_" + qs + "^(k)(n)|" : "|S_" + qs + "^(k)(n) u U_" + qs + "^(t)(n)|";
}

void markdown_table(std::ostringstream& out, const std::vector<TableCell>& cells, TableId table, int q) {
    if (cells.empty()) return;
    int k_lo = cells.front().k;
    int k_hi = cells.front().k;
    int n_lo = cells.front().n;
    int n_hi = cells.front().n;
    std::map<std::pair<int, int>, const TableCell*> grid;
    for (const auto& c : cells) {
        k_lo = std::min(k_lo, c.k);
        k_hi = std::max(k_hi, c.k);
        n_lo = std::min(n_lo, c.n);
        n_hi = std::max(n_hi, c.n);
        grid[{c.n, c.k}] = &c;
    }
    out << "### " << table_title(table, q) << "\n\n| n \\ k |";
    for (int k = k_lo; k <= k_hi; ++k) out << ' ' << k << " |";
    out << "\n|---|";
    for (int k = k_lo; k <= k_hi; ++k) out << "---|";
    out << '\n';
    std::vector<std::string> notes;
    for (int n = n_lo; n <= n_hi; ++n) {
        out << "| " << n << " |";
        for (int k = k_lo; k <= k_hi; ++k) {
            auto it = grid.find({n, k});
            if (it == grid.end()) {
                out << "  |";
                continue;
            }
            const TableCell& c = *it->second;
            out << ' ' << str(c.computed());
            if (c.agree && !*c.agree) out << '*';
            out << " |";
            if (!c.erratum.empty()) {
                notes.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ") erratum: " + c.erratum);
            } else if (c.agree && !*c.agree) {
                notes.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ") MISMATCH: closed " +
                                str(c.closed) + ", enumerated " + str(c.enumerated) + ", printed " + str(c.golden));
            }
        }
        out << '\n';
    }
    if (!notes.empty()) {
        out << '\n';
        for (const auto& note : notes) out << "* " << note << '\n';
    }
    out << '\n';
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void csv_table(std::ostringstream& out, const std::vector<TableCell>& cells) {
    out << "n,k,closed,enumerated,golden,agree,erratum\n";
    for (const auto& c : cells) {
        out << c.n << ',' << c.k << ',' << str(c.closed) << ',' << str(c.enumerated) << ',' << str(c.golden) << ',';
        if (c.agree) out << (*c.agree ? "true" : "false");
        out << ',' << csv_field(c.erratum) << '\n';
    }
}

nlohmann::ordered_json count_json(const std::optional<Count>& c) {
    if (!c) return nullptr;
    if (*c <= Count(std::numeric_limits<std::int64_t>::max())) return c->convert_to<std::int64_t>();
    return c->str();
}

} // namespace

std::optional<Count> golden_value(TableId table, int n, int k) {
    const auto& data = table == TableId::SSizes ? kGoldenS : kGoldenExpanded;
    auto row = data.find(n);
    if (row == data.end()) return std::nullopt;
    const int index = k - first_k(n);
    if (index < 0 || index >= static_cast<int>(row->second.size())) return std::nullopt;
    return Count(row->second[static_cast<std::size_t>(index)]);
}

bool has_erratum_annotation(TableId table, int n, int k) {
    return std::any_of(std::begin(kAnnotations), std::end(kAnnotations),
                       [&](const Annotation& a) { return a.table == table && a.n == n && a.k == k; });
}

bool CardinalityTables::consistent() const {
    auto ok = [](const TableCell& c) { return !c.agree || *c.agree || !c.erratum.empty(); };
    return std::all_of(s_sizes.begin(), s_sizes.end(), ok) &&
           std::all_of(expanded_sizes.begin(), expanded_sizes.end(), ok);
}

CardinalityTables reproduce_tables(int q, const ScanOptions& options) {
    const Bipartition bip = Bipartition::classic(q);
    std::vector<std::pair<int, int>> coords;
    for (int n = kMinN; n <= kMaxN; ++n) {
        for (int k = first_k(n); k <= n - 2; ++k) coords.emplace_back(n, k);
    }

    CardinalityTables out;
    out.q = q;
    out.s_sizes.resize(coords.size());
    out.expanded_sizes.resize(coords.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < coords.size(); i = next++) {
            const auto [n, k] = coords[i];
            out.s_sizes[i] = s_cell(bip, n, k, options);
            out.expanded_sizes[i] = expanded_cell(bip, n, k, options);
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(coords.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    return out;
}

std::string render_markdown(const CardinalityTables& tables) {
    std::ostringstream out;
    markdown_table(out, tables.s_sizes, TableId::SSizes, tables.q);
    markdown_table(out, tables.expanded_sizes, TableId::ExpandedSizes, tables.q);
    return out.str();
}

std::string render_csv(const CardinalityTables& tables) {
    std::ostringstream out;
    out << "# " << table_title(TableId::SSizes, tables.q) << '\n';
    csv_table(out, tables.s_sizes);
    out << "\n# " << table_title(TableId::ExpandedSizes, tables.q) << '\n';
    csv_table(out, tables.expanded_sizes);
    return out.str();
}

std::string render_json(const CardinalityTables& tables) {
    auto records = nlohmann::ordered_json::array();
    auto emit = [&](const std::vector<TableCell>& cells, const char* name) {
        for (const auto& c : cells) {
            nlohmann::ordered_json rec;
            rec["table"] = name;
            rec["q"] = tables.q;
            rec["n"] = c.n;
            rec["k"] = c.k;
            rec["closed"] = count_json(c.closed);
            rec["enumerated"] = count_json(c.enumerated);
            rec["golden"] = count_json(c.golden);
            rec["agree"] = c.agree ? nlohmann::ordered_json(*c.agree) : nlohmann::ordered_json(nullptr);
            rec["erratum"] = c.erratum.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.erratum);
            records.push_back(std::move(rec));
        }
    };
    emit(tables.s_sizes, "s");
    emit(tables.expanded_sizes, "expanded");
    return records.dump(2) + "\n";
}

} // namespace cbf
