#pragma once

#include <set>
#include <string>
#include <vector>

#include "cbf/code.hpp"
#include "cbf/text_format.hpp"

namespace testing_support {

inline cbf::Word w(const std::string& text, int q = 2) { return cbf::parse_word(text, q); }

inline std::set<std::string> strings(const cbf::Code& code) {
    std::set<std::string> out;
    for (const auto& word : code) out.insert(cbf::format_word(word, code.q()));
    return out;
}

inline std::set<std::string> strings(const std::vector<cbf::Word>& words, int q = 2) {
    std::set<std::string> out;
    for (const auto& word : words) out.insert(cbf::format_word(word, q));
    return out;
}

inline cbf::Code code_of(const std::set<std::string>& texts, int q = 2) {
    std::vector<cbf::Word> words;
    for (const auto& t : texts) words.push_back(w(t, q));
    return cbf::Code::from_words(q, std::move(words));
}

inline std::string digits(const std::vector<cbf::Symbol>& symbols) {
    std::string out;
    for (auto s : symbols) out += static_cast<char>('0' + s);
    return out;
}

}  // namespace testing_support
