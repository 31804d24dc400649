#include "cbf/verify.hpp"

namespace cbf {

namespace {

std::string_view key(WordView w) noexcept {
    return {reinterpret_cast<const char*>(w.data()), w.size()};
}

} // namespace

OverlapIndex::OverlapIndex(const Code& code)
    : code_(&code), prefixes_(code.n()), suffixes_(code.n()) {
    const std::size_t n = code.n();
    for (std::size_t len = 1; len < n; ++len) {
        prefixes_[len].reserve(code.size());
        suffixes_[len].reserve(code.size());
    }
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Word& w = code[i];
        for (std::size_t len = 1; len < n; ++len) {
            prefixes_[len].try_emplace(key(w.prefix(len)), i);
            suffixes_[len].try_emplace(key(w.suffix(len)), i);
        }
    }
}

std::optional<std::size_t> OverlapIndex::word_with_prefix(WordView w) const {
    if (w.empty() || w.size() >= prefixes_.size()) return std::nullopt;
    const auto& table = prefixes_[w.size()];
    if (auto it = table.find(key(w)); it != table.end()) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> OverlapIndex::word_with_suffix(WordView w) const {
    if (w.empty() || w.size() >= suffixes_.size()) return std::nullopt;
    const auto& table = suffixes_[w.size()];
    if (auto it = table.find(key(w)); it != table.end()) return it->second;
    return std::nullopt;
}

} // namespace cbf
