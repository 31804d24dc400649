#pragma once

#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbf/constructions.hpp"

namespace cbf {

/// Exact, unbounded counts.
using Count = boost::multiprecision::cpp_int;

/// Which cardinality formula for |U^{(t)}(n)| applies to (n, k).
enum class UBranch {
    Case1,           // n/2 <= k < (2n-1)/3
    Case2Boundary,   // k = (2n-1)/3
    Case2Interior,   // 2n/3 <= k < (3n-2)/4
    Case3Recurrence, // (3n-2)/4 <= k < n-2
    Case4KnMinus2,   // k = n-2, n >= 8
    SpecialN7K5,     // n = 7, k = 5
    NotApplicable,
};

/// Labels: case1, case2-boundary, case2-interior, case3-recurrence, case4-k=n-2, special-n7k5, not-applicable.
[[nodiscard]] std::string_view to_string(UBranch branch) noexcept;

/// Branch selection by exact integer comparisons.
[[nodiscard]] UBranch classify_u_branch(int n, int k) noexcept;

struct CountReport {
    int n = 0;
    int k = 0;
    int q = 0;
    int size_i = 0;
    int size_j = 0;
    std::optional<Count> closed_form;
    std::optional<Count> enumerated;
    UBranch branch = UBranch::NotApplicable;
    /// Set only when both counts are present.
    std::optional<bool> agree;
};

/// q^{n-k-2}|I|^k|J|^2, or |I|^{n-1}|J| for k = n-1. Throws NotApplicable when 2k < n.
[[nodiscard]] Count size_S_closed(const Bipartition& bip, int n, int k);

/// |V^{(t)}(n)| = |I|^{t+1}|J|^2 q^{n-t-3}.
[[nodiscard]] Count size_V_closed(const Bipartition& bip, int n, int k);

/// |U^{(t)}(n)| by materializing the memoized construction.
[[nodiscard]] Count count_U_enumerate(const Bipartition& bip, int n, int k, const ScanOptions& options = {},
                                      SuffixClassCache& cache = SuffixClassCache::global());

/**
 * |U^{(t)}(n)| from the branch formulas. The recurrence branches take the
 * inner u(m) from the product-set closed forms below the forced coordinate
 * and from the same suffix-class recurrence above it; nothing is enumerated.
 *
 * Throws NotApplicable when (n, k) is well-formed but outside n >= 7,
 * n/2 <= k <= n-2, and InvalidInput when 1 <= k <= n-1 fails.
 */
[[nodiscard]] CountReport count_U_closed(const Bipartition& bip, int n, int k);

enum class CountMethod { Closed, Enumerate, Both };

/// count_U_closed and/or count_U_enumerate folded into one report.
[[nodiscard]] CountReport count_U(const Bipartition& bip, int n, int k, CountMethod method,
                                  const ScanOptions& options = {},
                                  SuffixClassCache& cache = SuffixClassCache::global());

/**
 * Size of build_expanded(bip, n, k). In the n >= 7 expandable regime this
 * is size_S_closed + count_U_closed; the n = 5, 6 cases add the product-set
 * size; non-expandable S with 2k < n is enumerated.
 */
[[nodiscard]] Count count_expanded(const Bipartition& bip, int n, int k, const ScanOptions& options = {});

} // namespace cbf
