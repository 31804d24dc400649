#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <tuple>
#include <vector>

#include "cbf/code.hpp"
#include "cbf/verify.hpp"

namespace cbf {

/**
 * Parameters of the V/U expansion family for S^{(k)}(n) in its expandable
 * regime n >= 7, n/2 <= k <= n-2.
 *
 * t = max{2, n-k-1} is the length of the leading I-run of every V/U word,
 * and coordinate n-k+t (1-based) is forced into I for words longer than it.
 */
class ExpansionParams {
public:
    /// Throws InvalidInput outside n >= 7, n/2 <= k <= n-2.
    ExpansionParams(int n, int k);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int t() const noexcept { return t_; }
    /// 1-based coordinate n-k+t.
    [[nodiscard]] int forced_i_position() const noexcept { return forced_; }

    /// t+1 <= m <= n and m != n-k+t.
    [[nodiscard]] bool valid_length(int m) const noexcept;
    /// Suffix lengths excluded by the U rule for a word of length m:
    /// t+1 <= l <= m-t-1, l != n-k+t.
    [[nodiscard]] std::vector<int> excluded_suffix_lengths(int m) const;
    /// Lengths m in [t+1, n-t-1] \ {n-k+t}, the index set of the P/Q classes.
    [[nodiscard]] std::vector<int> class_lengths() const;

private:
    int n_;
    int k_;
    int t_;
    int forced_;
};

enum class ConstructionKind { S, SClassic, V, U, Expanded };

[[nodiscard]] std::string_view to_string(ConstructionKind kind) noexcept;
/// Accepts the CLI names `s`, `s-classic`, `v`, `u`, `expanded`.
[[nodiscard]] ConstructionKind parse_construction(std::string_view name);

/// Allowed symbols per coordinate; the product of the lists is a set of words.
using ProductShape = std::vector<std::vector<Symbol>>;

/// All words of a product shape, in lexicographic order.
[[nodiscard]] std::vector<Word> materialize(const ProductShape& shape);
/// Coordinate-wise minimum: the lexicographically smallest member.
[[nodiscard]] Word smallest_member(const ProductShape& shape);

/**
 * S_{I,J}^{(k)}(n): first k symbols in I, symbol k+1 and symbol n in J, and
 * symbols k+2 .. n-1 free of any k consecutive I-symbols.
 *
 * Requires n >= 2, 1 <= k <= n-1 and q^n within the guard.
 */
[[nodiscard]] Code build_S(const Bipartition& bip, int n, int k, const ScanOptions& options = {});

/// S with I = {0}, J = {1, ..., q-1}.
[[nodiscard]] Code build_S_classic(int q, int n, int k, const ScanOptions& options = {});

/// V^{(t)}(m), dispatched on m against the forced coordinate n-k+t.
[[nodiscard]] Code build_V(const ExpansionParams& params, const Bipartition& bip, int m);

/**
 * Memo for U^{(t)}(m), keyed by (q, I-mask, n, k, m).
 *
 * Lookups share a reader lock; a miss is computed outside the lock and the
 * first inserted value wins, so concurrent callers always see identical codes.
 */
class SuffixClassCache {
public:
    using Key = std::tuple<int, std::uint64_t, int, int, int>;

    [[nodiscard]] std::shared_ptr<const Code> find(const Key& key) const;
    std::shared_ptr<const Code> insert(const Key& key, Code code);
    void clear();
    [[nodiscard]] std::size_t size() const;

    /// Process-wide cache used when callers do not supply one.
    static SuffixClassCache& global();

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Code>> entries_;
};

/**
 * U^{(t)}(m): words of V(m) none of whose l-suffixes lie in U(l), for every
 * excluded length l. Recursive on m, memoized in `cache`.
 */
[[nodiscard]] std::shared_ptr<const Code> build_U_shared(const ExpansionParams& params, const Bipartition& bip, int m,
                                                         SuffixClassCache& cache = SuffixClassCache::global());
[[nodiscard]] Code build_U(const ExpansionParams& params, const Bipartition& bip, int m,
                           SuffixClassCache& cache = SuffixClassCache::global());

/// Same filter as build_U but excluding suffixes that lie in V(l). Not memoized.
[[nodiscard]] Code build_U_via_V_rule(const ExpansionParams& params, const Bipartition& bip, int m);

/**
 * A word that can be appended to S^{(k)}(n) in its expandable regime.
 *
 * For n/2 <= k < n-2 (n >= 6) and n-k-1 <= ell < k: smallest member of
 * I^ell x J^2 x Z_q^{n-k-3} x I x J^{k-ell}. For k = n-2 (n >= 5): smallest
 * member of I^2 x J x I x J^{n-4}, and `ell` is ignored.
 */
[[nodiscard]] Word lemma31_witness(const Bipartition& bip, int n, int k, int ell = 0);

/**
 * S^{(k)}(n) enlarged to a non-expandable cross-bifix-free code.
 *
 * Unchanged when S is already non-expandable (see s_is_non_expandable);
 * the fixed product sets for n = 5, 6; S u U^{(t)}(n) for n >= 7.
 * Throws NotApplicable for n = 4, k = 2 with q >= 3, which has no expansion.
 */
[[nodiscard]] Code build_expanded(const Bipartition& bip, int n, int k, const ScanOptions& options = {},
                                  SuffixClassCache& cache = SuffixClassCache::global());

/// Product shape added to S for the n = 5, 6 expandable cases.
[[nodiscard]] ProductShape small_expansion_shape(const Bipartition& bip, int n, int k);

/// Whether S^{(k)}(n) is non-expandable: k = n-1 or 2k < n, plus (4,2) in the
/// binary case only. For q >= 3 some word always extends S^{(2)}(4).
[[nodiscard]] constexpr bool s_is_non_expandable(int q, int n, int k) noexcept {
    return k == n - 1 || 2 * k < n || (n == 4 && q == 2);
}

} // namespace cbf
