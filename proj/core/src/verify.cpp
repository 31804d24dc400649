#include "cbf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "cbf/errors.hpp"

namespace cbf {

Word OverlapWitness::bifix() const {
    return direction == OverlapDirection::PrefixOfXIsSuffixOfV ? Word(x.prefix(length))
                                                               : Word(v.prefix(length));
}

bool OverlapWitness::holds() const {
    if (length == 0 || length >= x.size() || x.size() != v.size()) return false;
    return direction == OverlapDirection::PrefixOfXIsSuffixOfV ? equal(x.prefix(length), v.suffix(length))
                                                               : equal(v.prefix(length), x.suffix(length));
}

namespace {

void require_verifiable(const Code& code) {
    if (code.empty()) throw InvalidInput("verification requires a non-empty code");
    if (code.n() < 2) throw InvalidInput("verification requires word length >= 2");
}

std::optional<std::size_t> first_overlap_length(WordView u, WordView v) noexcept {
    for (std::size_t len = 1; len < u.size(); ++len) {
        if (equal(u.first(len), v.last(len))) return len;
    }
    return std::nullopt;
}

bool pair_overlaps(WordView a, WordView b) noexcept {
    return first_overlap_length(a, b).has_value() || first_overlap_length(b, a).has_value();
}

struct PartitionResult {
    std::optional<Word> first;
    std::uint64_t examined = 0;
    std::vector<Word> found;
};

/// Depth-first walk of Z_q^n in lexicographic order. A prefix that already
/// equals a suffix of some codeword rules out its whole subtree; since the
/// code is cross-bifix-free, no codeword lives in such a subtree.
class Scanner {
public:
    Scanner(const OverlapIndex& index, bool stop_at_first)
        : index_(index), code_(index.code()), n_(code_.n()), q_(code_.q()), stop_at_first_(stop_at_first),
          buffer_(n_), subtree_(n_ + 1, 1) {
        for (std::size_t d = n_; d-- > 0;) subtree_[d] = subtree_[d + 1] * static_cast<std::uint64_t>(q_);
    }

    PartitionResult run(WordView fixed_prefix) {
        result_ = {};
        std::copy(fixed_prefix.begin(), fixed_prefix.end(), buffer_.begin());
        for (std::size_t len = 1; len <= fixed_prefix.size() && len < n_; ++len) {
            if (index_.has_suffix(WordView(buffer_).first(len))) {
                result_.examined = subtree_[fixed_prefix.size()];
                return std::move(result_);
            }
        }
        descend(fixed_prefix.size());
        return std::move(result_);
    }

private:
    // Returns true once scanning should stop.
    bool descend(std::size_t depth) {
        if (depth == n_) return visit_leaf();
        for (int s = 0; s < q_; ++s) {
            buffer_[depth] = static_cast<Symbol>(s);
            const std::size_t next = depth + 1;
            if (next < n_ && index_.has_suffix(WordView(buffer_).first(next))) {
                result_.examined += subtree_[next];
                continue;
            }
            if (descend(next)) return true;
        }
        return false;
    }

    bool visit_leaf() {
        const WordView x(buffer_);
        if (code_.contains(x)) return false;
        ++result_.examined;
        for (std::size_t len = 1; len < n_; ++len) {
            if (index_.has_prefix(x.last(len))) return false;
        }
        if (shortest_bifix(x) != 0) return false;
        if (stop_at_first_) {
            result_.first = Word(x);
            return true;
        }
        result_.found.emplace_back(x);
        return false;
    }

    const OverlapIndex& index_;
    const Code& code_;
    std::size_t n_;
    int q_;
    bool stop_at_first_;
    std::vector<Symbol> buffer_;
    std::vector<std::uint64_t> subtree_; // q^(n-depth)
    PartitionResult result_;
};

std::vector<std::vector<Symbol>> partition_prefixes(int q, std::size_t n, unsigned threads) {
    std::size_t depth = 0;
    if (threads > 1) {
        std::uint64_t parts = 1;
        while (parts < 8ULL * threads && depth + 1 < n) {
            parts *= static_cast<std::uint64_t>(q);
            ++depth;
        }
    }
    std::vector<std::vector<Symbol>> prefixes{std::vector<Symbol>{}};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<std::vector<Symbol>> next;
        next.reserve(prefixes.size() * static_cast<std::size_t>(q));
        for (const auto& p : prefixes) {
            for (int s = 0; s < q; ++s) {
                next.push_back(p);
                next.back().push_back(static_cast<Symbol>(s));
            }
        }
        prefixes = std::move(next);
    }
    return prefixes;
}

/// Partitioned scan; partitions are merged in lexicographic order so the
/// outcome is the same for any thread count.
std::vector<PartitionResult> scan(const Code& code, const ScanOptions& options, bool stop_at_first) {
    require_verifiable(code);
    check_guard(code.q(), code.n(), options);
    const OverlapIndex index(code);
    if (!is_cross_bifix_free(code)) {
        throw InvalidInput("expandability is only defined for cross-bifix-free codes");
    }

    const auto prefixes = partition_prefixes(code.q(), code.n(), options.threads);
    std::vector<PartitionResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{prefixes.size()};

    auto worker = [&] {
        Scanner scanner(index, stop_at_first);
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            if (stop_at_first && i > best.load()) continue;
            results[i] = scanner.run(prefixes[i]);
            if (stop_at_first && results[i].first) {
                std::size_t current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
            }
        }
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(prefixes.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    return results;
}

} // namespace

CrossBifixResult is_cross_bifix_free(const Code& code) {
    require_verifiable(code);
    const OverlapIndex index(code);
    const std::size_t n = code.n();

    bool clean = true;
    for (const Word& u : code) {
        for (std::size_t len = 1; len < n && clean; ++len) {
            if (index.has_suffix(u.prefix(len))) clean = false;
        }
        if (!clean) break;
    }
    if (clean) return {};

    for (const Word& u : code) {
        for (const Word& v : code) {
            if (auto len = first_overlap_length(u.view(), v.view())) {
                return {false, OverlapWitness{OverlapDirection::PrefixOfXIsSuffixOfV, *len, u, v}};
            }
        }
    }
    return {}; // unreachable: the index found an overlap
}

std::optional<OverlapWitness> overlap_witness(const Word& x, const OverlapIndex& index) {
    const Code& code = index.code();
    if (x.size() != code.n()) {
        throw InvalidInput("candidate length " + std::to_string(x.size()) + " differs from code length " +
                           std::to_string(code.n()));
    }
    for (std::size_t len = 1; len < x.size(); ++len) {
        if (auto v = index.word_with_suffix(x.prefix(len))) {
            return OverlapWitness{OverlapDirection::PrefixOfXIsSuffixOfV, len, x, code[*v]};
        }
        if (auto v = index.word_with_prefix(x.suffix(len))) {
            return OverlapWitness{OverlapDirection::PrefixOfVIsSuffixOfX, len, x, code[*v]};
        }
        if (equal(x.prefix(len), x.suffix(len))) {
            return OverlapWitness{OverlapDirection::PrefixOfXIsSuffixOfV, len, x, x};
        }
    }
    return std::nullopt;
}

std::optional<OverlapWitness> overlap_witness(const Word& x, const Code& code) {
    const OverlapIndex index(code);
    return overlap_witness(x, index);
}

void check_guard(int q, std::size_t n, const ScanOptions& options) {
    const std::uint64_t space = space_size(q, n);
    if (space > options.guard) {
        throw ResourceLimit("exhaustive scan of " + std::to_string(q) + "^" + std::to_string(n) +
                            " words exceeds the guard of " + std::to_string(options.guard));
    }
}

ExpandabilityVerdict is_non_expandable(const Code& code, const ScanOptions& options) {
    const auto parts = scan(code, options, true);
    ExpandabilityVerdict verdict;
    for (const auto& part : parts) {
        verdict.candidates_examined += part.examined;
        if (part.first) {
            verdict.non_expandable = false;
            verdict.witness = part.first;
            return verdict;
        }
    }
    return verdict;
}

std::vector<Word> expansion_candidates(const Code& code, const ScanOptions& options) {
    auto parts = scan(code, options, false);
    std::vector<Word> out;
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.found.begin()), std::make_move_iterator(part.found.end()));
    }
    return out;
}

Code greedy_saturate(const Code& code, const ScanOptions& options) {
    const std::vector<Word> pool = expansion_candidates(code, options);
    const std::size_t size = pool.size();
    std::vector<std::vector<std::size_t>> conflicts(size);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            if (pair_overlaps(pool[a].view(), pool[b].view())) {
                conflicts[a].push_back(b);
                conflicts[b].push_back(a);
            }
        }
    }
    std::vector<std::size_t> degree(size);
    for (std::size_t i = 0; i < size; ++i) degree[i] = conflicts[i].size();
    std::vector<bool> alive(size, true);

    // min-degree rule, ties to the lexicographically smaller word
    Code out = code;
    for (;;) {
        std::size_t pick = size;
        for (std::size_t i = 0; i < size; ++i) {
            if (alive[i] && (pick == size || degree[i] < degree[pick])) pick = i;
        }
        if (pick == size) break;
        out.insert(pool[pick]);
        alive[pick] = false;
        for (std::size_t gone : conflicts[pick]) {
            if (!alive[gone]) continue;
            alive[gone] = false;
            for (std::size_t nb : conflicts[gone]) --degree[nb];
        }
    }
    return out;
}

} // namespace cbf
