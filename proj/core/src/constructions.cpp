#include "cbf/constructions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>

#include "cbf/errors.hpp"

namespace cbf {

namespace {

std::string params_text(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

void append(ProductShape& shape, const std::vector<Symbol>& symbols, int count) {
    for (int i = 0; i < count; ++i) shape.push_back(symbols);
}

} // namespace

ExpansionParams::ExpansionParams(int n, int k) : n_(n), k_(k) {
    if (n < 7 || 2 * k < n || k > n - 2) {
        throw InvalidInput("V/U constructions need n >= 7 and n/2 <= k <= n-2, got " + params_text(n, k));
    }
    t_ = std::max(2, n - k - 1);
    forced_ = n - k + t_;
}

bool ExpansionParams::valid_length(int m) const noexcept { return m >= t_ + 1 && m <= n_ && m != forced_; }

std::vector<int> ExpansionParams::excluded_suffix_lengths(int m) const {
    std::vector<int> out;
    for (int len = t_ + 1; len <= m - t_ - 1; ++len) {
        if (len != forced_) out.push_back(len);
    }
    return out;
}

std::vector<int> ExpansionParams::class_lengths() const { return excluded_suffix_lengths(n_); }

std::string_view to_string(ConstructionKind kind) noexcept {
    switch (kind) {
    case ConstructionKind::S: return "s";
    case ConstructionKind::SClassic: return "s-classic";
    case ConstructionKind::V: return "v";
    case ConstructionKind::U: return "u";
    case ConstructionKind::Expanded: return "expanded";
    }
    return "?";
}

ConstructionKind parse_construction(std::string_view name) {
    for (auto kind : {ConstructionKind::S, ConstructionKind::SClassic, ConstructionKind::V, ConstructionKind::U,
                      ConstructionKind::Expanded}) {
        if (name == to_string(kind)) return kind;
    }
    throw InvalidInput("unknown construction '" + std::string(name) + "'");
}

std::vector<Word> materialize(const ProductShape& shape) {
    std::vector<Word> out;
    if (std::any_of(shape.begin(), shape.end(), [](const auto& column) { return column.empty(); })) return out;
    std::vector<std::size_t> digit(shape.size(), 0);
    std::vector<Symbol> current(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) current[i] = shape[i][0];
    while (true) {
        out.emplace_back(current);
        std::size_t pos = shape.size();
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++digit[pos] < shape[pos].size()) {
                current[pos] = shape[pos][digit[pos]];
                break;
            }
            digit[pos] = 0;
            current[pos] = shape[pos][0];
        }
    }
}

Word smallest_member(const ProductShape& shape) {
    std::vector<Symbol> symbols;
    symbols.reserve(shape.size());
    for (const auto& column : shape) {
        if (column.empty()) throw InvalidInput("product shape has an empty coordinate");
        symbols.push_back(*std::min_element(column.begin(), column.end()));
    }
    return Word(std::move(symbols));
}

Code build_S(const Bipartition& bip, int n, int k, const ScanOptions& options) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw InvalidInput("S needs n >= 2 and 1 <= k <= n-1, got " + params_text(n, k));
    }
    check_guard(bip.q(), static_cast<std::size_t>(n), options);

    const auto i_syms = bip.i_symbols();
    const auto j_syms = bip.j_symbols();
    const auto all = bip.all_symbols();
    const auto len = static_cast<std::size_t>(n);
    const auto run_cap = static_cast<std::size_t>(k);

    std::vector<Word> words;
    std::vector<Symbol> buf(len);
    // Middle window s_{k+2} .. s_{n-1} (0-based k+1 .. n-2) is generated with a
    // running count of trailing I-symbols so no k-long I-run is ever built.
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t run) {
        if (pos == len - 1) {
            for (Symbol s : j_syms) {
                buf[pos] = s;
                words.emplace_back(buf);
            }
            return;
        }
        for (Symbol s : all) {
            const std::size_t next_run = bip.in_i(s) ? run + 1 : 0;
            if (next_run >= run_cap) continue;
            buf[pos] = s;
            fill(pos + 1, next_run);
        }
    };
    std::function<void(std::size_t)> head = [&](std::size_t pos) {
        if (pos == run_cap) {
            for (Symbol s : j_syms) {
                buf[pos] = s;
                if (pos == len - 1) {
                    words.emplace_back(buf);
                } else {
                    fill(pos + 1, 0);
                }
            }
            return;
        }
        for (Symbol s : i_syms) {
            buf[pos] = s;
            head(pos + 1);
        }
    };
    head(0);
    return Code(bip.q(), len, std::move(words), bip);
}

Code build_S_classic(int q, int n, int k, const ScanOptions& options) {
    return build_S(Bipartition::classic(q), n, k, options);
}

Code build_V(const ExpansionParams& params, const Bipartition& bip, int m) {
    if (!params.valid_length(m)) {
        throw InvalidInput("V(m) needs t+1 <= m <= n and m != n-k+t; got m=" + std::to_string(m) + " for " +
                           params_text(params.n(), params.k()));
    }
    const auto i_syms = bip.i_symbols();
    const auto j_syms = bip.j_symbols();
    const auto all = bip.all_symbols();
    const int t = params.t();
    const int forced = params.forced_i_position();

    ProductShape shape;
    append(shape, i_syms, t);
    append(shape, j_syms, 1);
    if (m == t + 1) {
        // I^t x J
    } else if (m < forced) {
        append(shape, all, m - t - 2);
        append(shape, j_syms, 1);
    } else {
        append(shape, all, forced - t - 2);
        append(shape, i_syms, 1);
        append(shape, all, m - forced - 1);
        append(shape, j_syms, 1);
    }
    return Code(bip.q(), static_cast<std::size_t>(m), materialize(shape), bip);
}

std::shared_ptr<const Code> SuffixClassCache::find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const Code> SuffixClassCache::insert(const Key& key, Code code) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, nullptr);
    if (inserted) it->second = std::make_shared<const Code>(std::move(code));
    return it->second;
}

void SuffixClassCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::size_t SuffixClassCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

SuffixClassCache& SuffixClassCache::global() {
    static SuffixClassCache cache;
    return cache;
}

namespace {

template <class Excluded>
Code filter_by_suffix_classes(const ExpansionParams& params, const Bipartition& bip, int m, Excluded&& excluded_for) {
    Code v = build_V(params, bip, m);
    std::vector<std::pair<std::size_t, std::shared_ptr<const Code>>> classes;
    for (int len : params.excluded_suffix_lengths(m)) {
        classes.emplace_back(static_cast<std::size_t>(len), excluded_for(len));
    }
    std::vector<Word> kept;
    for (const Word& w : v) {
        const bool hit = std::any_of(classes.begin(), classes.end(), [&w](const auto& entry) {
            return entry.second->contains(w.suffix(entry.first));
        });
        if (!hit) kept.push_back(w);
    }
    return Code(bip.q(), static_cast<std::size_t>(m), std::move(kept), bip);
}

} // namespace

std::shared_ptr<const Code> build_U_shared(const ExpansionParams& params, const Bipartition& bip, int m,
                                           SuffixClassCache& cache) {
    const SuffixClassCache::Key key{bip.q(), bip.i_mask(), params.n(), params.k(), m};
    if (auto hit = cache.find(key)) return hit;
    Code u = filter_by_suffix_classes(params, bip, m,
                                      [&](int len) { return build_U_shared(params, bip, len, cache); });
    return cache.insert(key, std::move(u));
}

Code build_U(const ExpansionParams& params, const Bipartition& bip, int m, SuffixClassCache& cache) {
    return *build_U_shared(params, bip, m, cache);
}

Code build_U_via_V_rule(const ExpansionParams& params, const Bipartition& bip, int m) {
    return filter_by_suffix_classes(params, bip, m, [&](int len) {
        return std::make_shared<const Code>(build_V(params, bip, len));
    });
}

Word lemma31_witness(const Bipartition& bip, int n, int k, int ell) {
    const auto i_syms = bip.i_symbols();
    const auto j_syms = bip.j_symbols();
    ProductShape shape;
    if (k == n - 2) {
        if (n < 5) throw InvalidInput("appendable witness for k = n-2 needs n >= 5, got " + params_text(n, k));
        append(shape, i_syms, 2);
        append(shape, j_syms, 1);
        append(shape, i_syms, 1);
        append(shape, j_syms, n - 4);
        return smallest_member(shape);
    }
    if (n < 6 || 2 * k < n || k > n - 2) {
        throw InvalidInput("appendable witness needs n >= 6 and n/2 <= k < n-2, got " + params_text(n, k));
    }
    if (ell < n - k - 1 || ell >= k) {
        throw InvalidInput("appendable witness needs n-k-1 <= ell < k, got ell=" + std::to_string(ell) + " for " +
                           params_text(n, k));
    }
    append(shape, i_syms, ell);
    append(shape, j_syms, 2);
    append(shape, bip.all_symbols(), n - k - 3);
    append(shape, i_syms, 1);
    append(shape, j_syms, k - ell);
    return smallest_member(shape);
}

ProductShape small_expansion_shape(const Bipartition& bip, int n, int k) {
    const auto i_syms = bip.i_symbols();
    const auto j_syms = bip.j_symbols();
    if (n == 5 && k == 3) return {i_syms, i_syms, j_syms, i_syms, j_syms};
    if (n == 6 && k == 3) return {i_syms, i_syms, j_syms, j_syms, i_syms, j_syms};
    if (n == 6 && k == 4) return {i_syms, j_syms, i_syms, bip.all_symbols(), j_syms, j_syms};
    throw InvalidInput("no fixed expansion shape for " + params_text(n, k));
}

Code build_expanded(const Bipartition& bip, int n, int k, const ScanOptions& options, SuffixClassCache& cache) {
    if (n < 4 || k < 1 || k > n - 1) {
        throw InvalidInput("expanded code needs n >= 4 and 1 <= k <= n-1, got " + params_text(n, k));
    }
    Code s = build_S(bip, n, k, options);
    if (n == 4 && !s_is_non_expandable(bip.q(), n, k)) {
        throw NotApplicable("S^(2)(4) is expandable for q >= 3 and has no fixed expansion; use greedy_saturate");
    }
    if (s_is_non_expandable(bip.q(), n, k)) return s;
    if (n <= 6) {
        return s.united(Code(bip.q(), static_cast<std::size_t>(n), materialize(small_expansion_shape(bip, n, k)), bip));
    }
    const ExpansionParams params(n, k);
    return s.united(*build_U_shared(params, bip, n, cache));
}

} // namespace cbf
