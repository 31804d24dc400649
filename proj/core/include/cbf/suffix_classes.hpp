#pragma once

#include <map>

#include "cbf/constructions.hpp"

namespace cbf {

/**
 * Suffix classes of V(n) for one (n, k):
 *   Q_m = { s in V(n) : the m-suffix of s lies in V(m) }
 *   P_m = { s in V(n) : the m-suffix of s lies in U(m) }
 * for m in [t+1, n-t-1] \ {n-k+t}.
 */
struct SuffixClasses {
    std::map<int, Code> q_classes;
    std::map<int, Code> p_classes;
    Code q_union;
    Code p_union;

    /// Union of the Q classes equals the union of the P classes.
    [[nodiscard]] bool unions_equal() const { return q_union == p_union; }
};

/// Throws InvalidInput outside n >= 7, n/2 <= k <= n-2, ResourceLimit past the guard.
[[nodiscard]] SuffixClasses suffix_classes(const Bipartition& bip, int n, int k, const ScanOptions& options = {},
                                           SuffixClassCache& cache = SuffixClassCache::global());

struct QpUnionReport {
    bool equal = false;
    Code q_union;
    Code p_union;
};

/// Builds both unions by definition and compares them.
[[nodiscard]] QpUnionReport qp_union_equality(const Bipartition& bip, int n, int k, const ScanOptions& options = {});

} // namespace cbf
