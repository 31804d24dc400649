#include "cbf/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cbf/errors.hpp"

namespace cbf {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Symbol checked_symbol(int value, int q, std::string_view text) {
    if (value < 0 || value >= q) {
        throw ParseError("symbol " + std::to_string(value) + " in '" + std::string(text) + "' is outside Z_" +
                         std::to_string(q));
    }
    return static_cast<Symbol>(value);
}

struct Header {
    int q = 0;
    int n = 0;
    std::vector<Symbol> i_class;
    bool has_i = false;
};

bool looks_like_header(std::string_view line) { return line.find('=') != std::string_view::npos; }

Header parse_header(std::string_view line) {
    Header h;
    bool has_q = false;
    bool has_n = false;
    std::istringstream fields{std::string(line)};
    std::string field;
    std::vector<std::string> raw_i;
    while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header field '" + field + "'");
        const std::string_view key = std::string_view(field).substr(0, eq);
        const std::string_view value = std::string_view(field).substr(eq + 1);
        if (key == "q") {
            h.q = parse_int(value, "q");
            has_q = true;
        } else if (key == "n") {
            h.n = parse_int(value, "n");
            has_n = true;
        } else if (key == "I") {
            h.has_i = true;
            for (auto part : split(value, ',')) raw_i.emplace_back(trim(part));
        } else {
            throw ParseError("unknown header field '" + std::string(key) + "'");
        }
    }
    if (!has_q || !has_n) throw ParseError("header must define q and n");
    if (h.q < 2 || h.q > kMaxAlphabet) throw ParseError("header q out of range");
    for (const auto& s : raw_i) h.i_class.push_back(checked_symbol(parse_int(s, "symbol"), h.q, line));
    return h;
}

} // namespace

std::string format_word(const Word& w, int q) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (q > 10) {
            if (i != 0) out.push_back(',');
            out += std::to_string(w[i]);
        } else {
            out.push_back(static_cast<char>('0' + w[i]));
        }
    }
    return out;
}

Word parse_word(std::string_view text, int q) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty word");
    std::vector<Symbol> symbols;
    if (text.find(',') != std::string_view::npos || q > 10) {
        for (auto part : split(text, ',')) {
            symbols.push_back(checked_symbol(parse_int(trim(part), "symbol"), q, text));
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError("invalid symbol '" + std::string(1, c) + "' in word");
            symbols.push_back(checked_symbol(c - '0', q, text));
        }
    }
    return Word(std::move(symbols));
}

Code parse_code_file(std::string_view text, int default_q) {
    std::optional<Header> header;
    std::vector<Word> words;
    bool seen_content = false;
    int q = default_q;
    for (auto raw : split(text, '\n')) {
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!seen_content && looks_like_header(line)) {
            header = parse_header(line);
            q = header->q;
            seen_content = true;
            continue;
        }
        seen_content = true;
        words.push_back(parse_word(line, q));
    }
    if (words.empty()) throw ParseError("code file contains no words");

    const std::size_t n = header ? static_cast<std::size_t>(header->n) : words.front().size();
    for (const Word& w : words) {
        if (w.size() != n) {
            throw ParseError("word '" + format_word(w, q) + "' has length " + std::to_string(w.size()) +
                             ", expected " + std::to_string(n));
        }
    }
    std::optional<Bipartition> bip;
    try {
        if (header && header->has_i) bip = Bipartition(q, header->i_class);
        return Code(q, n, std::move(words), bip);
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

std::string format_header(const Code& code) {
    std::string out = "q=" + std::to_string(code.q()) + " n=" + std::to_string(code.n());
    if (const auto& bip = code.bipartition()) {
        out += " I=";
        bool first = true;
        for (Symbol s : bip->i_symbols()) {
            if (!first) out.push_back(',');
            out += std::to_string(s);
            first = false;
        }
    }
    return out;
}

std::string format_code_file(const Code& code, bool with_header) {
    std::string out;
    if (with_header) out += format_header(code) + "\n";
    for (const Word& w : code) out += format_word(w, code.q()) + "\n";
    return out;
}

std::string code_to_json(const Code& code, bool verified, std::optional<bool> non_expandable) {
    nlohmann::ordered_json doc;
    doc["q"] = code.q();
    doc["n"] = code.n();
    if (const auto& bip = code.bipartition()) {
        doc["I"] = bip->i_symbols();
        doc["J"] = bip->j_symbols();
    } else {
        doc["I"] = nullptr;
        doc["J"] = nullptr;
    }
    auto words = nlohmann::ordered_json::array();
    for (const Word& w : code) words.push_back(format_word(w, code.q()));
    doc["words"] = std::move(words);
    doc["verified"] = verified;
    doc["non_expandable"] = non_expandable ? nlohmann::ordered_json(*non_expandable) : nlohmann::ordered_json(nullptr);
    return doc.dump(2);
}

} // namespace cbf
