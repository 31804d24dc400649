#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbf/code.hpp"

namespace cbf {

/// Which side of the pair supplies the prefix.
enum class OverlapDirection {
    PrefixOfXIsSuffixOfV,
    PrefixOfVIsSuffixOfX,
};

/// A proper prefix of one word that equals the same-length proper suffix of another.
struct OverlapWitness {
    OverlapDirection direction = OverlapDirection::PrefixOfXIsSuffixOfV;
    std::size_t length = 0;
    Word x;
    Word v;

    /// The shared string itself.
    [[nodiscard]] Word bifix() const;
    /// True iff the claimed prefix/suffix pair really coincides.
    [[nodiscard]] bool holds() const;
};

struct CrossBifixResult {
    bool cross_bifix_free = true;
    std::optional<OverlapWitness> witness;

    explicit operator bool() const noexcept { return cross_bifix_free; }
};

/**
 * Hash index of the j-length prefixes and suffixes of a code, for every
 * j in 1 .. n-1. Keys are views into the code's own storage, so the index
 * must not outlive the code it was built from.
 */
class OverlapIndex {
public:
    explicit OverlapIndex(const Code& code);

    /// Index (in code order) of the first word whose len-prefix equals w, if any.
    [[nodiscard]] std::optional<std::size_t> word_with_prefix(WordView w) const;
    /// Index (in code order) of the first word whose len-suffix equals w, if any.
    [[nodiscard]] std::optional<std::size_t> word_with_suffix(WordView w) const;

    [[nodiscard]] bool has_prefix(WordView w) const { return word_with_prefix(w).has_value(); }
    [[nodiscard]] bool has_suffix(WordView w) const { return word_with_suffix(w).has_value(); }

    [[nodiscard]] const Code& code() const noexcept { return *code_; }

private:
    using Table = std::unordered_map<std::string_view, std::size_t>;
    const Code* code_;
    std::vector<Table> prefixes_; // slot j holds length-j windows
    std::vector<Table> suffixes_;
};

/**
 * Cross-bifix-freeness, including each word against itself.
 *
 * On failure the witness is the first overlapping pair in (u, v) order over
 * the sorted code, smallest length first, reported as "prefix of u is suffix
 * of v" with x = u. Throws InvalidInput for an empty code or n < 2.
 */
[[nodiscard]] CrossBifixResult is_cross_bifix_free(const Code& code);

/**
 * Reason C u {x} fails to be cross-bifix-free because of x, if any.
 *
 * Lengths are tried in increasing order; at each length x's prefix against
 * the code's suffixes is tested first, then x's suffix against the code's
 * prefixes, then x against itself.
 */
[[nodiscard]] std::optional<OverlapWitness> overlap_witness(const Word& x, const Code& code);
[[nodiscard]] std::optional<OverlapWitness> overlap_witness(const Word& x, const OverlapIndex& index);

/// Default cap on q^n for exhaustive scans.
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 28;

struct ScanOptions {
    std::uint64_t guard = kDefaultGuard;
    /// Worker threads for scans over Z_q^n; results do not depend on this value.
    unsigned threads = 1;
};

struct ExpandabilityVerdict {
    bool non_expandable = true;
    /// Lexicographically smallest word that can be added, when expandable.
    std::optional<Word> witness;
    /// Words outside the code decided before the verdict: all of them when
    /// non-expandable, otherwise those up to and including the witness.
    std::uint64_t candidates_examined = 0;
};

/// Throws ResourceLimit when q^n exceeds the guard.
void check_guard(int q, std::size_t n, const ScanOptions& options);

/**
 * Exhaustive non-expandability check over Z_q^n \ C.
 *
 * Throws InvalidInput when C is empty or not cross-bifix-free, and
 * ResourceLimit when q^n exceeds the guard.
 */
[[nodiscard]] ExpandabilityVerdict is_non_expandable(const Code& code, const ScanOptions& options = {});

/// Every word outside C that can be added on its own, in lexicographic order.
[[nodiscard]] std::vector<Word> expansion_candidates(const Code& code, const ScanOptions& options = {});

/**
 * Repeatedly adds the expansion candidate that conflicts with the fewest
 * remaining candidates (ties: smallest word) until none remain.
 * The result is a non-expandable superset of C; no claim about its size.
 */
[[nodiscard]] Code greedy_saturate(const Code& code, const ScanOptions& options = {});

} // namespace cbf
