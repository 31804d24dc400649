#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cbf/words.hpp"

namespace cbf {

/**
 * A set of equal-length words over Z_q.
 *
 * Words are kept sorted and unique, so iteration order is the lexicographic
 * order used for every "first witness" rule in the verifiers. An empty code
 * is allowed as an intermediate value; the verifiers reject it.
 */
class Code {
public:
    /// Throws InvalidInput on q outside [2, 64], n < 1, a wrong-length word, or a symbol >= q.
    Code(int q, std::size_t n, std::vector<Word> words, std::optional<Bipartition> bip = std::nullopt);

    /// Length inferred from the first word; throws InvalidInput if `words` is empty.
    static Code from_words(int q, std::vector<Word> words, std::optional<Bipartition> bip = std::nullopt);

    [[nodiscard]] int q() const noexcept { return q_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }
    [[nodiscard]] const Word& operator[](std::size_t i) const noexcept { return words_[i]; }
    [[nodiscard]] auto begin() const noexcept { return words_.begin(); }
    [[nodiscard]] auto end() const noexcept { return words_.end(); }
    [[nodiscard]] const std::optional<Bipartition>& bipartition() const noexcept { return bip_; }

    [[nodiscard]] bool contains(WordView w) const noexcept;
    [[nodiscard]] bool contains(const Word& w) const noexcept { return contains(w.view()); }

    /// Adds `w` (no-op if present). Throws InvalidInput on a length or alphabet mismatch.
    void insert(Word w);

    /// Set union; lengths and alphabets must match.
    [[nodiscard]] Code united(const Code& other) const;

    friend bool operator==(const Code& a, const Code& b) noexcept {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int q_;
    std::size_t n_;
    std::vector<Word> words_;
    std::optional<Bipartition> bip_;
};

/// Number of words in Z_q^n, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t space_size(int q, std::size_t n) noexcept;

} // namespace cbf
