#include "reduxwords/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace reduxwords {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + ": n must be >= 1");
}

std::uint64_t rho_t_memo(std::uint64_t n, std::map<std::uint64_t, std::uint64_t>& memo) {
    static constexpr std::uint64_t kSeed[] = {2, 4, 6};
    if (n <= 3) return kSeed[n - 1];
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const std::uint64_t v = n % 2 == 0 ? rho_t_memo(n / 2, memo) + rho_t_memo(n / 2 + 1, memo)
                                       : 2 * rho_t_memo((n + 1) / 2, memo);
    memo.emplace(n, v);
    return v;
}

VerificationReport make_report(std::string id, std::uint64_t lo, std::uint64_t hi) {
    VerificationReport r;
    r.claim_id = std::move(id);
    r.n_lo = lo;
    r.n_hi = hi;
    return r;
}

void expect(VerificationReport& r, std::uint64_t n, std::int64_t expected, std::int64_t actual,
            std::string detail = {}) {
    if (expected != actual) r.counterexamples.push_back({n, expected, actual, std::move(detail)});
}

using Evaluator = std::function<ClosedFormValue(std::uint64_t)>;

VerificationReport compare_profile(std::string id, const ComplexityProfile& profile,
                                   std::uint64_t lo, const Evaluator& closed) {
    auto r = make_report(std::move(id), lo, profile.n_max());
    r.certified_window = profile.certified_window;
    for (std::uint64_t n = lo; n <= profile.n_max(); ++n) {
        const ClosedFormValue c = closed(n);
        if (c.declared_exception) r.declared_exceptions.push_back(n);
        expect(r, n, static_cast<std::int64_t>(c.value), static_cast<std::int64_t>(profile.at(n)));
    }
    r.finalize();
    return r;
}

// Engine values of rho_red_f at lengths n = step*k + offset (k >= k_min)
// must all equal `expected`.
VerificationReport check_red_f_residue(std::string id, std::size_t n_max, std::uint64_t step,
                                       std::uint64_t offset, std::uint64_t k_min,
                                       std::uint64_t expected, const WindowPolicy& policy) {
    const std::uint64_t lo = step * k_min + offset;
    auto r = make_report(std::move(id), lo, n_max);
    if (lo > n_max) {
        r.finalize();
        return r;
    }
    auto profile = reduced_factor_complexity(paperfolding(), n_max, policy);
    r.certified_window = profile.certified_window;
    for (std::uint64_t n = lo; n <= n_max; n += step) {
        expect(r, n, static_cast<std::int64_t>(expected), static_cast<std::int64_t>(profile.at(n)));
    }
    r.finalize();
    return r;
}

ExtremesTable tm_extremes(std::size_t length, const WindowPolicy& policy) {
    return alternation_extremes(thue_morse(), length, policy);
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::exception_at_small_n: return "exception-at-small-n";
    }
    return "?";
}

void VerificationReport::finalize() {
    if (!counterexamples.empty()) {
        status = ClaimStatus::fail;
    } else if (!declared_exceptions.empty()) {
        status = ClaimStatus::exception_at_small_n;
    } else {
        status = ClaimStatus::pass;
    }
}

std::uint64_t rho_t_closed(std::uint64_t n) {
    require_positive(n, "rho_t_closed");
    std::map<std::uint64_t, std::uint64_t> memo;
    return rho_t_memo(n, memo);
}

std::uint64_t rho_red_t_recursive(std::uint64_t n) {
    require_positive(n, "rho_red_t_recursive");
    if (n == 1) return 2;
    if (n % 2 == 1) return rho_red_t_recursive((n + 1) / 2);
    return rho_red_t_recursive(n / 4 + 1) + 2;
}

std::uint64_t rho_f_closed(std::uint64_t n) {
    require_positive(n, "rho_f_closed");
    static constexpr std::uint64_t kSmall[] = {2, 4, 8, 12, 18, 23};
    return n <= 6 ? kSmall[n - 1] : 4 * n;
}

ClosedFormValue rho_red_f_closed(std::uint64_t n) {
    require_positive(n, "rho_red_f_closed");
    if (n == 1) return {2, true};
    const auto r = n % 8;
    return {(r == 3 || r == 5 || r == 7) ? 6u : 4u, false};
}

ClosedFormValue rho_abred_f_closed(std::uint64_t n) {
    require_positive(n, "rho_abred_f_closed");
    if (n == 1) return {2, true};
    if (n % 2 == 0) return {3, false};
    return {n % 4 == 1 ? 4u : 5u, false};
}

VerificationReport check_mu_alternation_lemma(std::size_t len_max) {
    if (len_max == 0) throw DomainError("check_mu_alternation_lemma: len_max must be >= 1");
    if (len_max > 30) throw DomainError("check_mu_alternation_lemma: len_max must be <= 30");
    auto r = make_report("mu_alternation", 1, len_max);
    const Morphism mu = thue_morse_morphism();
    for (std::size_t len = 1; len <= len_max; ++len) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            std::vector<Symbol> symbols(len);
            for (std::size_t i = 0; i < len; ++i) symbols[i] = (bits >> i) & 1;
            Word w(std::move(symbols), 2);
            const auto alpha = static_cast<std::int64_t>(alternations(w));
            const auto image = static_cast<std::int64_t>(alternations(mu.apply(w)));
            expect(r, len, 2 * static_cast<std::int64_t>(len) - 1 - alpha, image, w.to_string());
        }
    }
    r.finalize();
    return r;
}

VerificationReport check_tm_max_min(const ExtremesTable& table, std::size_t n_max) {
    if (n_max < 2) throw DomainError("check_tm_max_min: n_max must be >= 2");
    if (table.n_max() < 2 * n_max + 1) throw DomainError("extremes table too short");
    auto r = make_report("tm_max_min", 2, n_max);
    r.certified_window = table.certified_window;
    auto m = [&](std::size_t k) { return static_cast<std::int64_t>(table.m(k)); };
    auto M = [&](std::size_t k) { return static_cast<std::int64_t>(table.M(k)); };
    for (std::size_t n = 2; n <= n_max; ++n) {
        const auto s = static_cast<std::int64_t>(n);
        expect(r, n, 2 * s - 1 - M(n + 1), m(2 * n), "m_2n");
        expect(r, n, 2 * s - 1 - m(n), M(2 * n), "M_2n");
        expect(r, n, 2 * s - M(n + 1), m(2 * n + 1), "m_2n+1");
        expect(r, n, 2 * s - m(n + 1), M(2 * n + 1), "M_2n+1");
    }
    r.finalize();
    return r;
}

VerificationReport check_tm_mod4(const ExtremesTable& table, std::size_t n_max) {
    if (n_max < 1) throw DomainError("check_tm_mod4: n_max must be >= 1");
    if (table.n_max() < 4 * n_max + 2) throw DomainError("extremes table too short");
    auto r = make_report("tm_mod4", 1, n_max);
    r.certified_window = table.certified_window;
    auto m = [&](std::size_t k) { return static_cast<std::int64_t>(table.m(k)); };
    auto M = [&](std::size_t k) { return static_cast<std::int64_t>(table.M(k)); };
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto s = static_cast<std::int64_t>(n);
        expect(r, n, 2 * s - 1 + m(n + 1), m(4 * n), "m_4n");
        expect(r, n, 2 * s + M(n + 1), M(4 * n), "M_4n");
        expect(r, n, 2 * s + m(n + 1), m(4 * n + 2), "m_4n+2");
        expect(r, n, 2 * s + 1 + M(n + 1), M(4 * n + 2), "M_4n+2");
    }
    r.finalize();
    return r;
}

VerificationReport check_extremes_recursions(std::size_t n_max, const WindowPolicy& policy) {
    if (n_max < 2) throw DomainError("check_extremes_recursions: n_max must be >= 2");
    const ExtremesTable table = tm_extremes(4 * n_max + 2, policy);
    auto a = check_tm_max_min(table, n_max);
    auto b = check_tm_mod4(table, n_max);
    auto r = make_report("tm_max_min+tm_mod4", 1, n_max);
    r.certified_window = table.certified_window;
    r.counterexamples = std::move(a.counterexamples);
    r.counterexamples.insert(r.counterexamples.end(), b.counterexamples.begin(),
                             b.counterexamples.end());
    r.finalize();
    return r;
}

VerificationReport check_odd_len_lemma(std::size_t n_max, const WindowPolicy& policy) {
    if (n_max < 3) throw DomainError("check_odd_len_lemma: n_max must be >= 3");
    const SequenceHandle f = paperfolding();
    const auto certified = reduced_factor_complexity(f, n_max, policy);
    const std::size_t L = certified.certified_window;
    const auto data = f.materialize(L);
    std::span<const Symbol> x(data->data(), L);

    auto r = make_report("odd_len", 3, n_max);
    r.certified_window = L;
    AlternationPrefix alt(x);
    // breaks[i + 2] - breaks[i] counts i with x[i] == x[i + 2] (same parity chain).
    std::vector<std::uint32_t> breaks(L + 2, 0);
    for (std::size_t i = 0; i < L; ++i) {
        const bool equal = i + 2 < L && x[i] == x[i + 2];
        breaks[i + 2] = breaks[i] + (equal ? 1u : 0u);
    }
    for (std::size_t len = 3; len <= n_max; len += 2) {
        const std::size_t k = (len - 1) / 2;
        std::int64_t checked = 0;
        bool failed = false;
        for (std::size_t i = 0; i + len <= L; ++i) {
            // skeleton x[i], x[i+2], ..., x[i+2k] alternates iff no equal step
            if (breaks[i + 2 * k] != breaks[i]) continue;
            ++checked;
            const auto runs = static_cast<std::int64_t>(alt.window(i, len)) + 1;
            if (!failed && runs != static_cast<std::int64_t>(k + 1)) {
                expect(r, len, static_cast<std::int64_t>(k + 1), runs,
                       "window at " + std::to_string(i + 1));
                failed = true;
            }
        }
        if (checked == 0) {
            r.counterexamples.push_back({len, 1, 0, "no window with alternating skeleton"});
        }
        r.observations.push_back({len, checked});
    }
    r.finalize();
    return r;
}

VerificationReport check_bridge_formula(std::size_t n_max, const WindowPolicy& policy) {
    const SequenceHandle t = thue_morse();
    const auto table = alternation_extremes(t, n_max, policy);
    const auto profile = reduced_factor_complexity(t, n_max, policy);
    auto r = make_report("tm_red_bridge", 1, n_max);
    r.certified_window = std::max(table.certified_window, profile.certified_window);
    for (std::size_t n = 1; n <= n_max; ++n) {
        expect(r, n, static_cast<std::int64_t>(reduced_complexity_from_extremes(table, n)),
               static_cast<std::int64_t>(profile.at(n)));
    }
    r.finalize();
    return r;
}

VerificationReport scan_conjecture_odd_halving(std::size_t n_max, const WindowPolicy& policy) {
    if (n_max < 1) throw DomainError("scan_conjecture_odd_halving: n_max must be >= 1");
    const auto p = reduced_abelian_complexity(thue_morse(), 2 * n_max + 1, policy);
    auto r = make_report("conj_odd_halving", 0, n_max);
    r.conjecture = true;
    r.certified_window = p.certified_window;
    for (std::size_t n = 0; n <= n_max; ++n) {
        expect(r, n, static_cast<std::int64_t>(p.at(n + 1)), static_cast<std::int64_t>(p.at(2 * n + 1)));
    }
    r.finalize();
    return r;
}

VerificationReport scan_conjecture_mod4_gap(std::size_t n_max, const WindowPolicy& policy) {
    if (n_max < 1) throw DomainError("scan_conjecture_mod4_gap: n_max must be >= 1");
    const auto p = reduced_abelian_complexity(thue_morse(), 4 * n_max + 2, policy);
    auto r = make_report("conj_mod4_gap", 1, n_max);
    r.conjecture = true;
    r.certified_window = p.certified_window;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto diff = static_cast<std::int64_t>(p.at(4 * n + 2)) -
                          static_cast<std::int64_t>(p.at(4 * n));
        const std::int64_t predicted = thue_morse_at(n + 1) == thue_morse_at(3 * n + 1) ? 0 : 1;
        expect(r, n, predicted, std::abs(diff));
        if (diff != 0) r.observations.push_back({n, diff > 0 ? 1 : -1});
    }
    r.finalize();
    return r;
}

const std::vector<std::string>& registered_claims() {
    static const std::vector<std::string> ids = {
        "tm_red",     "pf_red",   "abred_f",  "rho_t_A005942", "rho_f_4n", "mu_alternation",
        "tm_max_min", "tm_mod4",  "odd_len",  "f_2n",          "f_1mod8",  "f_3mod8",
        "f_5mod8",    "f_7mod8",  "conj_odd_halving",          "conj_mod4_gap",
    };
    return ids;
}

bool is_conjecture(std::string_view claim_id) { return claim_id.starts_with("conj_"); }

VerificationReport verify(std::string_view claim_id, std::size_t n_max,
                          const WindowPolicy& policy) {
    if (n_max == 0) throw DomainError("verify: n_max must be >= 1");
    const std::string id(claim_id);
    auto plain = [](auto fn) {
        return [fn](std::uint64_t n) { return ClosedFormValue{fn(n), false}; };
    };

    if (id == "tm_red") {
        return compare_profile(id, reduced_factor_complexity(thue_morse(), n_max, policy), 1,
                               plain(rho_red_t_recursive));
    }
    if (id == "pf_red") {
        return compare_profile(id, reduced_factor_complexity(paperfolding(), n_max, policy), 1,
                               rho_red_f_closed);
    }
    if (id == "abred_f") {
        return compare_profile(id, reduced_abelian_complexity(paperfolding(), n_max, policy), 1,
                               rho_abred_f_closed);
    }
    if (id == "rho_t_A005942") {
        return compare_profile(id, factor_complexity(thue_morse(), n_max, policy), 1,
                               plain(rho_t_closed));
    }
    if (id == "rho_f_4n") {
        return compare_profile(id, factor_complexity(paperfolding(), n_max, policy), 1,
                               plain(rho_f_closed));
    }
    if (id == "mu_alternation") return check_mu_alternation_lemma(n_max);
    if (id == "tm_max_min") {
        if (n_max < 2) throw DomainError("tm_max_min: n_max must be >= 2");
        return check_tm_max_min(tm_extremes(2 * n_max + 1, policy), n_max);
    }
    if (id == "tm_mod4") return check_tm_mod4(tm_extremes(4 * n_max + 2, policy), n_max);
    if (id == "odd_len") return check_odd_len_lemma(n_max, policy);
    if (id == "f_2n") return check_red_f_residue(id, n_max, 2, 0, 1, 4, policy);
    if (id == "f_1mod8") return check_red_f_residue(id, n_max, 8, 1, 1, 4, policy);
    if (id == "f_3mod8") return check_red_f_residue(id, n_max, 8, 3, 0, 6, policy);
    if (id == "f_5mod8") return check_red_f_residue(id, n_max, 8, 5, 0, 6, policy);
    if (id == "f_7mod8") return check_red_f_residue(id, n_max, 8, 7, 0, 6, policy);
    if (id == "conj_odd_halving") return scan_conjecture_odd_halving(n_max, policy);
    if (id == "conj_mod4_gap") return scan_conjecture_mod4_gap(n_max, policy);
    throw UnknownClaimError(id);
}

}  // namespace reduxwords
