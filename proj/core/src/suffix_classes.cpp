#include "cbf/suffix_classes.hpp"

namespace cbf {

namespace {

Code select_by_suffix(const Code& base, const Code& targets) {
    std::vector<Word> kept;
    for (const Word& w : base) {
        if (targets.contains(w.suffix(targets.n()))) kept.push_back(w);
    }
    return Code(base.q(), base.n(), std::move(kept), base.bipartition());
}

} // namespace

SuffixClasses suffix_classes(const Bipartition& bip, int n, int k, const ScanOptions& options,
                             SuffixClassCache& cache) {
    const ExpansionParams params(n, k);
    check_guard(bip.q(), static_cast<std::size_t>(n), options);
    const Code v = build_V(params, bip, n);
    const Code empty(bip.q(), v.n(), {}, bip);

    SuffixClasses out{{}, {}, empty, empty};
    for (int m : params.class_lengths()) {
        Code q_m = select_by_suffix(v, build_V(params, bip, m));
        Code p_m = select_by_suffix(v, *build_U_shared(params, bip, m, cache));
        out.q_union = out.q_union.united(q_m);
        out.p_union = out.p_union.united(p_m);
        out.q_classes.emplace(m, std::move(q_m));
        out.p_classes.emplace(m, std::move(p_m));
    }
    return out;
}

QpUnionReport qp_union_equality(const Bipartition& bip, int n, int k, const ScanOptions& options) {
    SuffixClasses classes = suffix_classes(bip, n, k, options);
    const bool same = classes.unions_equal();
    return {same, std::move(classes.q_union), std::move(classes.p_union)};
}

} // namespace cbf
