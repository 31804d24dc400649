#include "cbf/words.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cbf/errors.hpp"

namespace cbf {

namespace {

void require_bifix_length(std::size_t len) {
    if (len < 2) {
        throw InvalidInput("prefix/suffix sets need a word of length >= 2, got " + std::to_string(len));
    }
}

} // namespace

Bipartition::Bipartition(int q, std::span<const Symbol> i_class) : q_(q) {
    if (q < 2 || q > kMaxAlphabet) {
        throw InvalidInput("alphabet size must lie in [2, 64], got " + std::to_string(q));
    }
    for (Symbol s : i_class) {
        if (s >= q) {
            throw InvalidInput("symbol " + std::to_string(s) + " is outside Z_" + std::to_string(q));
        }
        i_mask_ |= std::uint64_t{1} << s;
    }
    size_i_ = std::popcount(i_mask_);
    if (size_i_ == 0) {
        throw InvalidInput("class I must be non-empty");
    }
    if (size_i_ == q) {
        throw InvalidInput("class J must be non-empty (I covers all of Z_q)");
    }
}

Bipartition::Bipartition(int q, std::initializer_list<Symbol> i_class)
    : Bipartition(q, std::span<const Symbol>(i_class.begin(), i_class.size())) {}

Bipartition Bipartition::classic(int q) { return Bipartition(q, {Symbol{0}}); }

std::vector<Symbol> Bipartition::i_symbols() const {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(size_i_));
    for (int s = 0; s < q_; ++s) {
        if (in_i(static_cast<Symbol>(s))) out.push_back(static_cast<Symbol>(s));
    }
    return out;
}

std::vector<Symbol> Bipartition::j_symbols() const {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(size_j()));
    for (int s = 0; s < q_; ++s) {
        if (in_j(static_cast<Symbol>(s))) out.push_back(static_cast<Symbol>(s));
    }
    return out;
}

std::vector<Symbol> Bipartition::all_symbols() const {
    std::vector<Symbol> out(static_cast<std::size_t>(q_));
    for (int s = 0; s < q_; ++s) out[static_cast<std::size_t>(s)] = static_cast<Symbol>(s);
    return out;
}

bool Word::fits_alphabet(int q) const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(), [q](Symbol s) { return s < q; });
}

bool equal(WordView a, WordView b) noexcept { return std::ranges::equal(a, b); }

bool less(WordView a, WordView b) noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Word> prefixes(const Word& w) {
    require_bifix_length(w.size());
    std::vector<Word> out;
    out.reserve(w.size() - 1);
    for (WordView p : prefix_views(w.view())) out.emplace_back(p);
    return out;
}

std::vector<Word> suffixes(const Word& w) {
    require_bifix_length(w.size());
    std::vector<Word> out;
    out.reserve(w.size() - 1);
    for (WordView s : suffix_views(w.view())) out.emplace_back(s);
    return out;
}

std::size_t shortest_bifix(WordView w) noexcept {
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (equal(w.first(len), w.last(len))) return len;
    }
    return 0;
}

bool is_bifix_free(WordView w) {
    require_bifix_length(w.size());
    return shortest_bifix(w) == 0;
}

bool is_code_free(WordView w, std::span<const Word> forbidden) {
    if (forbidden.empty()) {
        throw InvalidInput("forbidden code must be non-empty");
    }
    const std::size_t width = forbidden.front().size();
    if (width == 0) {
        throw InvalidInput("forbidden words must have length >= 1");
    }
    for (const Word& f : forbidden) {
        if (f.size() != width) {
            throw InvalidInput("forbidden code mixes word lengths");
        }
    }
    if (w.size() < width) return true;
    for (std::size_t start = 0; start + width <= w.size(); ++start) {
        const WordView window = w.subspan(start, width);
        const bool hit = std::any_of(forbidden.begin(), forbidden.end(),
                                     [window](const Word& f) { return equal(window, f.view()); });
        if (hit) return false;
    }
    return true;
}

std::size_t longest_i_run(WordView w, const Bipartition& bip) noexcept {
    std::size_t best = 0;
    std::size_t run = 0;
    for (Symbol s : w) {
        run = bip.in_i(s) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

bool is_block_free(WordView w, const Bipartition& bip, int k) {
    if (k < 1) {
        throw InvalidInput("block length k must be >= 1, got " + std::to_string(k));
    }
    return longest_i_run(w, bip) < static_cast<std::size_t>(k);
}

} // namespace cbf
