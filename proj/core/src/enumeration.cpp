#include "cbf/enumeration.hpp"

#include <functional>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbf/errors.hpp"

namespace cbf {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Count ipow(int base, int exponent) {
    Count out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Rational rpow(int base, int exponent) {
    if (exponent >= 0) return Rational(ipow(base, exponent));
    return Rational(Count(1), ipow(base, -exponent));
}

Count to_integer(const Rational& value, std::string_view what) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw std::logic_error("closed form for " + std::string(what) + " is not an integer");
    }
    return boost::multiprecision::numerator(value);
}

std::string params_text(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

void require_well_formed(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw InvalidInput("need n >= 2 and 1 <= k <= n-1, got " + params_text(n, k));
    }
}

bool in_expandable_regime(int n, int k) noexcept { return n >= 7 && 2 * k >= n && k <= n - 2; }

} // namespace

std::string_view to_string(UBranch branch) noexcept {
    switch (branch) {
    case UBranch::Case1: return "case1";
    case UBranch::Case2Boundary: return "case2-boundary";
    case UBranch::Case2Interior: return "case2-interior";
    case UBranch::Case3Recurrence: return "case3-recurrence";
    case UBranch::Case4KnMinus2: return "case4-k=n-2";
    case UBranch::SpecialN7K5: return "special-n7k5";
    case UBranch::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

UBranch classify_u_branch(int n, int k) noexcept {
    if (!in_expandable_regime(n, k)) return UBranch::NotApplicable;
    if (n == 7 && k == 5) return UBranch::SpecialN7K5;
    if (k == n - 2) return n >= 8 ? UBranch::Case4KnMinus2 : UBranch::NotApplicable;
    if (3 * k < 2 * n - 1) return UBranch::Case1;
    if (3 * k == 2 * n - 1) return UBranch::Case2Boundary;
    if (4 * k < 3 * n - 2) return UBranch::Case2Interior;
    return UBranch::Case3Recurrence;
}

Count size_S_closed(const Bipartition& bip, int n, int k) {
    require_well_formed(n, k);
    if (2 * k < n) {
        throw NotApplicable("no closed form for |S| when k < n/2 " + params_text(n, k) + "; enumerate instead");
    }
    if (k == n - 1) return ipow(bip.size_i(), n - 1) * bip.size_j();
    return ipow(bip.q(), n - k - 2) * ipow(bip.size_i(), k) * ipow(bip.size_j(), 2);
}

Count size_V_closed(const Bipartition& bip, int n, int k) {
    const ExpansionParams params(n, k);
    const int t = params.t();
    return ipow(bip.size_i(), t + 1) * ipow(bip.size_j(), 2) * ipow(bip.q(), n - t - 3);
}

Count count_U_enumerate(const Bipartition& bip, int n, int k, const ScanOptions& options, SuffixClassCache& cache) {
    const ExpansionParams params(n, k);
    check_guard(bip.q(), static_cast<std::size_t>(n), options);
    return Count(build_U_shared(params, bip, n, cache)->size());
}

CountReport count_U_closed(const Bipartition& bip, int n, int k) {
    require_well_formed(n, k);
    CountReport report;
    report.n = n;
    report.k = k;
    report.q = bip.q();
    report.size_i = bip.size_i();
    report.size_j = bip.size_j();
    report.branch = classify_u_branch(n, k);
    if (report.branch == UBranch::NotApplicable) {
        throw NotApplicable("U is only defined for n >= 7 and n/2 <= k <= n-2; got " + params_text(n, k));
    }

    const ExpansionParams params(n, k);
    const int q = bip.q();
    const int a = bip.size_i();
    const int b = bip.size_j();
    const int t = params.t();
    const int forced = params.forced_i_position();

    // Inner u(m) for the recurrence branches. Past the forced coordinate, V(m)
    // minus its disjoint suffix classes; a class word is a fixed-shape prefix
    // followed by a U(l) word, and the prefix also carries the forced I when
    // l <= m - forced.
    std::map<int, Count> memo;
    std::function<Count(int)> u = [&](int m) -> Count {
        if (m == t + 1) return ipow(a, t) * b;
        if (m < forced) return ipow(a, t) * ipow(b, 2) * ipow(q, m - t - 2);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        Count total = ipow(a, t + 1) * ipow(b, 2) * ipow(q, m - t - 3);
        for (int l : params.excluded_suffix_lengths(m)) {
            total -= l <= m - forced ? ipow(a, t + 1) * b * ipow(q, m - l - t - 2) * u(l)
                                     : ipow(a, t) * b * ipow(q, m - l - t - 1) * u(l);
        }
        return memo.emplace(m, total).first->second;
    };

    Rational value;
    switch (report.branch) {
    case UBranch::Case1:
        value = Rational(ipow(a, n - k) * ipow(b, 2)) * rpow(q, k - 2) -
                Rational(ipow(a, 2 * (n - k) - 2) * ipow(b, 2)) * rpow(q, 2 * k - n - 1) *
                    Rational((2 * k - n) * b + q);
        break;
    case UBranch::Case2Boundary:
        value = rpow(q, k - 2) * Rational(ipow(a, n - k) * ipow(b, 2)) -
                Rational(ipow(a, 2 * n - 2 * k - 2) * ipow(b, 2)) * rpow(q, 2 * k - n - 1) *
                    Rational(a + (2 * k - n - 1) * b);
        break;
    case UBranch::Case2Interior: {
        const int d = 3 * k - 2 * n;
        value = rpow(q, k - 2) * Rational(ipow(a, n - k) * ipow(b, 2)) -
                Rational(ipow(a, 2 * n - 2 * k - 2) * ipow(b, 2)) * rpow(q, 2 * k - n - 2) *
                    Rational((6 * k - 4 * n + 2) * a * b + a * q + (3 * n - 3 - 4 * k) * b * q) +
                Rational(ipow(a, 3 * n - 3 * k - 3) * ipow(b, 3)) * rpow(q, d - 1) *
                    (Rational((d + 1) * q) + Rational(Count((d + 1) * d), Count(2)) * Rational(b));
        break;
    }
    case UBranch::Case3Recurrence: {
        Count total = ipow(q, k - 2) * ipow(a, n - k) * ipow(b, 2);
        for (int m = t + 1; m <= k - t; ++m) {
            if (m == t + n - k) continue;
            total -= ipow(a, t + 1) * b * ipow(q, n - t - m - 2) * u(m);
        }
        for (int m = k - t + 1; m <= n - t - 1; ++m) {
            total -= ipow(a, t) * b * ipow(q, n - t - m - 1) * u(m);
        }
        value = Rational(total);
        break;
    }
    case UBranch::Case4KnMinus2: {
        Count total = ipow(q, n - 5) * ipow(a, 3) * ipow(b, 2);
        for (int m = 3; m <= n - 4; ++m) {
            if (m == 4) continue;
            total -= ipow(a, 3) * b * ipow(q, n - m - 4) * u(m);
        }
        total -= ipow(a, 2) * b * u(n - 3);
        value = Rational(total);
        break;
    }
    case UBranch::SpecialN7K5:
        value = Rational(ipow(a, 3) * ipow(b, 2) * (ipow(q, 2) - ipow(a, 2)));
        break;
    case UBranch::NotApplicable:
        break;
    }
    report.closed_form = to_integer(value, "|U| " + params_text(n, k));
    return report;
}

CountReport count_U(const Bipartition& bip, int n, int k, CountMethod method, const ScanOptions& options,
                    SuffixClassCache& cache) {
    CountReport report;
    if (method == CountMethod::Enumerate) {
        require_well_formed(n, k);
        report.n = n;
        report.k = k;
        report.q = bip.q();
        report.size_i = bip.size_i();
        report.size_j = bip.size_j();
        report.branch = classify_u_branch(n, k);
        if (!in_expandable_regime(n, k)) {
            throw NotApplicable("U is only defined for n >= 7 and n/2 <= k <= n-2; got " + params_text(n, k));
        }
    } else {
        report = count_U_closed(bip, n, k);
    }
    if (method != CountMethod::Closed) {
        report.enumerated = count_U_enumerate(bip, n, k, options, cache);
    }
    if (report.closed_form && report.enumerated) {
        report.agree = *report.closed_form == *report.enumerated;
    }
    return report;
}

Count count_expanded(const Bipartition& bip, int n, int k, const ScanOptions& options) {
    if (n < 4 || k < 1 || k > n - 1) {
        throw InvalidInput("expanded code needs n >= 4 and 1 <= k <= n-1, got " + params_text(n, k));
    }
    if (n == 4 && !s_is_non_expandable(bip.q(), n, k)) {
        throw NotApplicable("S^(2)(4) is expandable for q >= 3 and has no fixed expansion; use greedy_saturate");
    }
    if (s_is_non_expandable(bip.q(), n, k)) {
        if (2 * k >= n) return size_S_closed(bip, n, k);
        return Count(build_S(bip, n, k, options).size());
    }
    if (n <= 6) {
        Count extra = 1;
        for (const auto& column : small_expansion_shape(bip, n, k)) extra *= column.size();
        return size_S_closed(bip, n, k) + extra;
    }
    return size_S_closed(bip, n, k) + *count_U_closed(bip, n, k).closed_form;
}

} // namespace cbf
