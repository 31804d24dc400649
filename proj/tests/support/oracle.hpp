#pragma once

// Brute-force reference implementations over digit strings. Deliberately
// shares nothing with the library beyond the standard library.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Words = std::set<std::string>;

inline std::vector<std::string> all_words(int q, int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        next.reserve(out.size() * static_cast<std::size_t>(q));
        for (const auto& w : out)
            for (int s = 0; s < q; ++s) next.push_back(w + static_cast<char>('0' + s));
        out = std::move(next);
    }
    return out;
}

inline bool overlaps(const std::string& a, const std::string& b) {
    // some proper prefix of a equals a suffix of b
    for (std::size_t len = 1; len < a.size(); ++len)
        if (a.substr(0, len) == b.substr(b.size() - len)) return true;
    return false;
}

inline bool bifix_free(const std::string& w) { return !overlaps(w, w); }

inline bool cross_bifix_free(const Words& code) {
    for (const auto& a : code)
        for (const auto& b : code)
            if (overlaps(a, b)) return false;
    return true;
}

inline Words candidates(const Words& code, int q) {
    Words out;
    const int n = static_cast<int>(code.begin()->size());
    for (const auto& x : all_words(q, n)) {
        if (code.count(x)) continue;
        Words bigger = code;
        bigger.insert(x);
        if (cross_bifix_free(bigger)) out.insert(x);
    }
    return out;
}

inline bool non_expandable(const Words& code, int q) { return candidates(code, q).empty(); }

struct Split {
    int q;
    std::string i;  // symbols of I as digits
    bool in_i(char c) const { return i.find(c) != std::string::npos; }
    bool in_j(char c) const { return !in_i(c); }
};

inline bool has_i_run(const std::string& w, const Split& sp, int k) {
    int run = 0;
    for (char c : w) {
        run = sp.in_i(c) ? run + 1 : 0;
        if (run >= k) return true;
    }
    return false;
}

// first k in I, positions k+1 and n in J, positions k+2..n-1 without k consecutive I
inline Words s_code(const Split& sp, int n, int k) {
    Words out;
    for (const auto& w : all_words(sp.q, n)) {
        bool ok = true;
        for (int p = 0; p < k; ++p) ok = ok && sp.in_i(w[p]);
        ok = ok && sp.in_j(w[k]) && sp.in_j(w[n - 1]);
        if (ok && k + 1 < n - 1) ok = !has_i_run(w.substr(k + 1, n - k - 2), sp, k);
        if (ok) out.insert(w);
    }
    return out;
}

inline int t_of(int n, int k) { return std::max(2, n - k - 1); }

// V(m) straight from the coordinate rules (1-based positions)
inline Words v_code(const Split& sp, int n, int k, int m) {
    const int t = t_of(n, k);
    const int f = n - k + t;
    Words out;
    for (const auto& w : all_words(sp.q, m)) {
        bool ok = true;
        for (int p = 1; p <= t; ++p) ok = ok && sp.in_i(w[p - 1]);
        ok = ok && sp.in_j(w[t]);
        if (m > t + 1) ok = ok && sp.in_j(w[m - 1]);
        if (m > f) ok = ok && sp.in_i(w[f - 1]);
        if (ok) out.insert(w);
    }
    return out;
}

inline std::vector<int> excluded(int n, int k, int m) {
    const int t = t_of(n, k);
    std::vector<int> out;
    for (int l = t + 1; l <= m - t - 1; ++l)
        if (l != n - k + t) out.push_back(l);
    return out;
}

inline Words filter_suffixes(const Words& v, const std::function<const Words&(int)>& forbidden, const std::vector<int>& lengths) {
    Words out;
    for (const auto& w : v) {
        bool keep = true;
        for (int l : lengths)
            if (forbidden(l).count(w.substr(w.size() - l))) keep = false;
        if (keep) out.insert(w);
    }
    return out;
}

class UFamily {
public:
    UFamily(Split sp, int n, int k) : sp_(std::move(sp)), n_(n), k_(k) {}

    const Words& u(int m) {
        if (auto it = u_.find(m); it != u_.end()) return it->second;
        Words built = filter_suffixes(v(m), [this](int l) -> const Words& { return u(l); }, excluded(n_, k_, m));
        return u_.emplace(m, std::move(built)).first->second;
    }
    const Words& v(int m) {
        if (auto it = v_.find(m); it != v_.end()) return it->second;
        return v_.emplace(m, v_code(sp_, n_, k_, m)).first->second;
    }

private:
    Split sp_;
    int n_, k_;
    std::map<int, Words> u_, v_;
};

}  // namespace oracle
