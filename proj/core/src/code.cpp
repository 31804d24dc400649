#include "cbf/code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cbf/errors.hpp"

namespace cbf {

namespace {

void validate_word(const Word& w, int q, std::size_t n) {
    if (w.size() != n) {
        throw InvalidInput("word of length " + std::to_string(w.size()) + " in a code of length " +
                           std::to_string(n));
    }
    if (!w.fits_alphabet(q)) {
        throw InvalidInput("word contains a symbol outside Z_" + std::to_string(q));
    }
}

} // namespace

Code::Code(int q, std::size_t n, std::vector<Word> words, std::optional<Bipartition> bip)
    : q_(q), n_(n), words_(std::move(words)), bip_(std::move(bip)) {
    if (q < 2 || q > kMaxAlphabet) {
        throw InvalidInput("alphabet size must lie in [2, 64], got " + std::to_string(q));
    }
    if (n < 1) {
        throw InvalidInput("code length must be >= 1");
    }
    if (bip_ && bip_->q() != q) {
        throw InvalidInput("bipartition alphabet does not match the code alphabet");
    }
    for (const Word& w : words_) validate_word(w, q_, n_);
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Code Code::from_words(int q, std::vector<Word> words, std::optional<Bipartition> bip) {
    if (words.empty()) {
        throw InvalidInput("cannot infer the length of an empty code");
    }
    const std::size_t n = words.front().size();
    return Code(q, n, std::move(words), std::move(bip));
}

bool Code::contains(WordView w) const noexcept {
    if (w.size() != n_) return false;
    auto it = std::lower_bound(words_.begin(), words_.end(), w,
                               [](const Word& a, WordView b) { return less(a.view(), b); });
    return it != words_.end() && equal(it->view(), w);
}

void Code::insert(Word w) {
    validate_word(w, q_, n_);
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) words_.insert(it, std::move(w));
}

Code Code::united(const Code& other) const {
    if (other.q_ != q_ || other.n_ != n_) {
        throw InvalidInput("cannot unite codes with different alphabets or lengths");
    }
    std::vector<Word> merged;
    merged.reserve(words_.size() + other.words_.size());
    std::set_union(words_.begin(), words_.end(), other.words_.begin(), other.words_.end(),
                   std::back_inserter(merged));
    Code out = *this;
    out.words_ = std::move(merged);
    return out;
}

std::uint64_t space_size(int q, std::size_t n) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    const auto base = static_cast<std::uint64_t>(q);
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kMax / base) return kMax;
        total *= base;
    }
    return total;
}

} // namespace cbf
