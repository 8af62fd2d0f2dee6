#pragma once

// Closed-form evaluators for the reduced complexities of t and f, and
// harnesses that compare them with the enumeration engine.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "reduxwords/complexity.hpp"

namespace reduxwords {

enum class ClaimStatus { pass, fail, exception_at_small_n };

std::string_view to_string(ClaimStatus status);

struct Counterexample {
    std::uint64_t n = 0;
    std::int64_t expected = 0;
    std::int64_t actual = 0;
    std::string detail;  // which identity, when a claim bundles several
};

struct Observation {
    std::uint64_t n = 0;
    std::int64_t value = 0;
};

struct VerificationReport {
    std::string claim_id;
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    ClaimStatus status = ClaimStatus::pass;
    bool conjecture = false;
    std::vector<Counterexample> counterexamples;
    std::vector<std::uint64_t> declared_exceptions;
    /// Scanner side data, e.g. the sign of the nonzero mod-4 gaps.
    std::vector<Observation> observations;
    std::size_t certified_window = 0;

    bool passed() const noexcept { return status != ClaimStatus::fail; }
    /// Sets status from the counterexample and exception lists.
    void finalize();
};

/// Value of a closed form, or of the displayed table at a declared small-n
/// exception where the closed form does not apply.
struct ClosedFormValue {
    std::uint64_t value = 0;
    bool declared_exception = false;
};

// Factor complexity of t (A005942); recursion from n = 4 on.
std::uint64_t rho_t_closed(std::uint64_t n);
// rho_red_t(n) = rho_red_t((n+1)/2) for odd n, rho_red_t(m+1) + 2 for n = 4m, 4m+2.
std::uint64_t rho_red_t_recursive(std::uint64_t n);
// 4n for n > 6.
std::uint64_t rho_f_closed(std::uint64_t n);
// 6 for n = 3, 5, 7 (mod 8), else 4; n = 1 is a declared exception (2).
ClosedFormValue rho_red_f_closed(std::uint64_t n);
// 3 for even n, 4 for n = 1 (mod 4), 5 for n = 3 (mod 4); n = 1 declared (2).
ClosedFormValue rho_abred_f_closed(std::uint64_t n);

/// mu(w) has 2|w| - 1 - alpha alternations, for all binary w, 1 <= |w| <= len_max.
VerificationReport check_mu_alternation_lemma(std::size_t len_max);

/// m_2n = 2n-1-M_{n+1}, M_2n = 2n-1-m_n, m_{2n+1} = 2n-M_{n+1},
/// M_{2n+1} = 2n-m_{n+1}, for 2 <= n <= n_max.
VerificationReport check_tm_max_min(const ExtremesTable& table, std::size_t n_max);
/// m_4n = 2n-1+m_{n+1}, M_4n = 2n+M_{n+1}, m_{4n+2} = 2n+m_{n+1},
/// M_{4n+2} = 2n+1+M_{n+1}, for 1 <= n <= n_max.
VerificationReport check_tm_mod4(const ExtremesTable& table, std::size_t n_max);
/// Both of the above on a certified ExtremesTable of t reaching 4 n_max + 2.
VerificationReport check_extremes_recursions(std::size_t n_max, const WindowPolicy& policy = {});

/// Factors of f of odd length 2k+1 <= n_max whose every-other letters
/// alternate have exactly k+1 runs.
VerificationReport check_odd_len_lemma(std::size_t n_max, const WindowPolicy& policy = {});

/// 2(M_n - m_n + 1) equals the engine's reduced factor complexity of t.
VerificationReport check_bridge_formula(std::size_t n_max, const WindowPolicy& policy = {});

/// rho_abred_t(2n+1) = rho_abred_t(n+1) for 0 <= n <= n_max.
VerificationReport scan_conjecture_odd_halving(std::size_t n_max, const WindowPolicy& policy = {});

/// |rho_abred_t(4n+2) - rho_abred_t(4n)| is 0 when t_{n+1} = t_{3n+1} and 1
/// otherwise, for 1 <= n <= n_max. Observations hold the sign of each nonzero
/// difference.
VerificationReport scan_conjecture_mod4_gap(std::size_t n_max, const WindowPolicy& policy = {});

const std::vector<std::string>& registered_claims();
bool is_conjecture(std::string_view claim_id);

/// Runs the named claim over [1, n_max] (lengths for mu_alternation).
VerificationReport verify(std::string_view claim_id, std::size_t n_max,
                          const WindowPolicy& policy = {});

}  // namespace reduxwords
