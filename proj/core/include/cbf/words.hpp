#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ranges>
#include <span>
#include <vector>

namespace cbf {

using Symbol = std::uint8_t;
using WordView = std::span<const Symbol>;

/// Largest supported alphabet; I is kept as a 64-bit membership mask.
inline constexpr int kMaxAlphabet = 64;

/**
 * Split of Z_q into two non-empty classes I and J.
 *
 * Only the membership mask of I is stored; J is its complement within
 * {0, ..., q-1}.
 */
class Bipartition {
public:
    /// Throws InvalidInput unless 2 <= q <= 64 and I is a non-empty proper subset of Z_q.
    Bipartition(int q, std::span<const Symbol> i_class);
    Bipartition(int q, std::initializer_list<Symbol> i_class);

    /// I = {0}, J = {1, ..., q-1}.
    static Bipartition classic(int q);

    [[nodiscard]] int q() const noexcept { return q_; }
    [[nodiscard]] bool in_i(Symbol s) const noexcept { return s < q_ && ((i_mask_ >> s) & 1U) != 0; }
    [[nodiscard]] bool in_j(Symbol s) const noexcept { return s < q_ && ((i_mask_ >> s) & 1U) == 0; }
    [[nodiscard]] int size_i() const noexcept { return size_i_; }
    [[nodiscard]] int size_j() const noexcept { return q_ - size_i_; }
    [[nodiscard]] std::uint64_t i_mask() const noexcept { return i_mask_; }

    /// Ascending symbol lists, materialized on demand.
    [[nodiscard]] std::vector<Symbol> i_symbols() const;
    [[nodiscard]] std::vector<Symbol> j_symbols() const;
    [[nodiscard]] std::vector<Symbol> all_symbols() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    int q_ = 0;
    std::uint64_t i_mask_ = 0;
    int size_i_ = 0;
};

/// Fixed-length sequence of symbols. Ordering is lexicographic with symbols compared numerically.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(WordView view) : symbols_(view.begin(), view.end()) {}

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    [[nodiscard]] WordView view() const noexcept { return symbols_; }
    [[nodiscard]] const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    /// The first / last `len` symbols (len <= size()).
    [[nodiscard]] WordView prefix(std::size_t len) const noexcept { return view().first(len); }
    [[nodiscard]] WordView suffix(std::size_t len) const noexcept { return view().last(len); }

    /// True iff every symbol is below q.
    [[nodiscard]] bool fits_alphabet(int q) const noexcept;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
};

[[nodiscard]] bool equal(WordView a, WordView b) noexcept;
[[nodiscard]] bool less(WordView a, WordView b) noexcept;

/// Lazy views of the proper prefixes / suffixes of w, shortest first. No allocation.
[[nodiscard]] inline auto prefix_views(WordView w) {
    return std::views::iota(std::size_t{1}, w.size() < 1 ? std::size_t{1} : w.size()) |
           std::views::transform([w](std::size_t len) { return w.first(len); });
}
[[nodiscard]] inline auto suffix_views(WordView w) {
    return std::views::iota(std::size_t{1}, w.size() < 1 ? std::size_t{1} : w.size()) |
           std::views::transform([w](std::size_t len) { return w.last(len); });
}

/// Proper prefixes of lengths 1 .. size-1, shortest first. Throws InvalidInput if size < 2.
[[nodiscard]] std::vector<Word> prefixes(const Word& w);
/// Proper suffixes of lengths 1 .. size-1, shortest first. Throws InvalidInput if size < 2.
[[nodiscard]] std::vector<Word> suffixes(const Word& w);

/// No proper prefix equals the proper suffix of the same length. Throws InvalidInput if size < 2.
[[nodiscard]] bool is_bifix_free(WordView w);
[[nodiscard]] inline bool is_bifix_free(const Word& w) { return is_bifix_free(w.view()); }

/// Length of the shortest bifix of `w`, or 0 when `w` is bifix-free. No length check.
[[nodiscard]] std::size_t shortest_bifix(WordView w) noexcept;

/**
 * C-free test: no contiguous window of w equals a member of `forbidden`.
 *
 * Words shorter than the forbidden length are trivially free. Throws
 * InvalidInput when `forbidden` is empty or mixes lengths.
 */
[[nodiscard]] bool is_code_free(WordView w, std::span<const Word> forbidden);

/// I^k-free test without materializing I^k. Throws InvalidInput if k < 1.
[[nodiscard]] bool is_block_free(WordView w, const Bipartition& bip, int k);

/// Length of the longest run of consecutive I-symbols in w.
[[nodiscard]] std::size_t longest_i_run(WordView w, const Bipartition& bip) noexcept;

} // namespace cbf
