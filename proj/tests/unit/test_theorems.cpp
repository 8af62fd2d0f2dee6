#include <doctest.h>

#include <algorithm>

#include "reduxwords/theorems.hpp"
#include "support/oracles.hpp"

using namespace reduxwords;

TEST_CASE("rho_t_closed") {
    const std::vector<std::uint64_t> head{2, 4, 6, 10, 12, 16, 20, 22, 24, 28, 32, 36, 40, 42, 44};
    for (std::size_t n = 1; n <= head.size(); ++n) CHECK(rho_t_closed(n) == head[n - 1]);
    CHECK_THROWS_AS(rho_t_closed(0), DomainError);
}

TEST_CASE("rho_red_t_recursive") {
    CHECK(rho_red_t_recursive(1) == 2);
    CHECK(rho_red_t_recursive(2) == 4);
    CHECK(rho_red_t_recursive(3) == 4);
    CHECK(rho_red_t_recursive(12) == 8);
    const std::vector<std::uint64_t> head{2, 4, 4, 6, 4, 6, 6, 6, 4, 6, 6, 8, 6, 8, 6, 6,
                                          4, 6, 6, 8, 6, 8, 8};
    for (std::size_t n = 1; n <= head.size(); ++n) CHECK(rho_red_t_recursive(n) == head[n - 1]);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        if (n % 2 == 1 && n > 1) CHECK(rho_red_t_recursive(n) == rho_red_t_recursive((n + 1) / 2));
    }
    CHECK_THROWS_AS(rho_red_t_recursive(0), DomainError);
}

TEST_CASE("paperfolding closed forms") {
    CHECK(rho_f_closed(7) == 28);
    CHECK(rho_f_closed(5) == 18);
    CHECK(rho_f_closed(1) == 2);
    CHECK(rho_red_f_closed(3).value == 6);
    CHECK(rho_red_f_closed(4).value == 4);
    CHECK(rho_red_f_closed(1).declared_exception);
    CHECK(rho_red_f_closed(1).value == 2);
    CHECK_FALSE(rho_red_f_closed(9).declared_exception);
    CHECK(rho_abred_f_closed(2).value == 3);
    CHECK(rho_abred_f_closed(3).value == 5);
    CHECK(rho_abred_f_closed(5).value == 4);
    CHECK(rho_abred_f_closed(7).value == 5);
    CHECK(rho_abred_f_closed(1).declared_exception);
    CHECK_THROWS_AS(rho_f_closed(0), DomainError);
    CHECK_THROWS_AS(rho_red_f_closed(0), DomainError);
}

TEST_CASE("closed forms against the engine up to 512") {
    const auto fac_t = factor_complexity(thue_morse(), 512);
    const auto red_t = reduced_factor_complexity(thue_morse(), 512);
    const auto fac_f = factor_complexity(paperfolding(), 512);
    const auto red_f = reduced_factor_complexity(paperfolding(), 512);
    const auto abred_f = reduced_abelian_complexity(paperfolding(), 512);
    for (std::size_t n = 1; n <= 512; ++n) {
        CHECK(rho_t_closed(n) == fac_t.at(n));
        CHECK(rho_red_t_recursive(n) == red_t.at(n));
        CHECK(rho_red_f_closed(n).value == red_f.at(n));
        CHECK(rho_abred_f_closed(n).value == abred_f.at(n));
        if (n >= 7) CHECK(fac_f.at(n) == 4 * n);
    }
}

TEST_CASE("mu alternation lemma") {
    const auto r = check_mu_alternation_lemma(12);
    CHECK(r.status == ClaimStatus::pass);
    CHECK(r.counterexamples.empty());
    CHECK_THROWS_AS(check_mu_alternation_lemma(31), DomainError);
}

TEST_CASE("extremes recursions on t") {
    // m_4 = 2*1 - 1 + m_2 = 1; M_4 = 2 + M_2 = 3
    const auto small = alternation_extremes(thue_morse(), 6);
    CHECK(small.m(4) == 1 + small.m(2));
    CHECK(small.M(4) == 2 + small.M(2));
    CHECK(small.M(6) == 3 + small.M(2));

    const auto r = check_extremes_recursions(512);
    CHECK(r.status == ClaimStatus::pass);
    CHECK(r.counterexamples.empty());

    // A corrupted table must be caught.
    auto table = alternation_extremes(thue_morse(), 4 * 16 + 2);
    table.max_alternations[9] += 1;  // M_10
    CHECK(check_tm_max_min(table, 16).status == ClaimStatus::fail);
    CHECK(check_tm_mod4(table, 16).status == ClaimStatus::fail);
    CHECK_THROWS_AS(check_tm_mod4(table, 17), DomainError);
}

TEST_CASE("odd length lemma on f") {
    const auto r = check_odd_len_lemma(129);
    CHECK(r.status == ClaimStatus::pass);
    CHECK(r.observations.size() == 64);
    for (const auto& o : r.observations) CHECK(o.value > 0);
    CHECK_THROWS_AS(check_odd_len_lemma(2), DomainError);
}

TEST_CASE("bridge formula") {
    const auto r = check_bridge_formula(512);
    CHECK(r.status == ClaimStatus::pass);
    CHECK(r.claim_id == "tm_red_bridge");
}

TEST_CASE("verify dispatch") {
    auto r = verify("tm_red", 256);
    CHECK(r.status == ClaimStatus::pass);
    CHECK(r.n_lo == 1);
    CHECK(r.n_hi == 256);
    CHECK(r.certified_window > 0);

    for (const char* id : {"pf_red", "abred_f"}) {
        r = verify(id, 256);
        CHECK(r.status == ClaimStatus::exception_at_small_n);
        CHECK(r.passed());
        CHECK(r.declared_exceptions == std::vector<std::uint64_t>{1});
        CHECK(r.counterexamples.empty());
    }
    for (const char* id : {"rho_t_A005942", "rho_f_4n", "tm_max_min", "tm_mod4",
                           "odd_len", "f_2n", "f_1mod8", "f_3mod8", "f_5mod8", "f_7mod8"}) {
        CAPTURE(id);
        CHECK(verify(id, 64).passed());
    }
    CHECK(verify("mu_alternation", 10).passed());  // n_max is a word length here
    CHECK_THROWS_AS(verify("no_such_claim", 10), UnknownClaimError);
    CHECK_THROWS_AS(verify("tm_red", 0), DomainError);
}

TEST_CASE("claim registry") {
    const auto& ids = registered_claims();
    CHECK(ids.size() == 16);
    CHECK(std::find(ids.begin(), ids.end(), "tm_red") != ids.end());
    CHECK(is_conjecture("conj_odd_halving"));
    CHECK(is_conjecture("conj_mod4_gap"));
    CHECK_FALSE(is_conjecture("tm_red"));
    CHECK(to_string(ClaimStatus::exception_at_small_n) == "exception-at-small-n");
}

TEST_CASE("conjecture scans") {
    const auto abred_t = reduced_abelian_complexity(thue_morse(), 14);
    CHECK(abred_t.at(7) == 4);
    CHECK(abred_t.at(4) == 4);
    CHECK(abred_t.at(6) == 5);
    CHECK(abred_t.at(14) == 6);
    CHECK(abred_t.at(12) == 6);

    const auto odd = scan_conjecture_odd_halving(256);
    CHECK(odd.conjecture);
    CHECK(odd.counterexamples.empty());
    CHECK(odd.n_lo == 0);

    const auto gap = scan_conjecture_mod4_gap(128);
    CHECK(gap.conjecture);
    CHECK(gap.counterexamples.empty());
    // One sign per nonzero gap, i.e. per n with t_{n+1} != t_{3n+1}.
    std::size_t nonzero = 0;
    for (std::uint64_t n = 1; n <= 128; ++n) nonzero += thue_morse_at(n + 1) != thue_morse_at(3 * n + 1);
    CHECK(gap.observations.size() == nonzero);
    for (const auto& o : gap.observations) CHECK((o.value == 1 || o.value == -1));
    CHECK(gap.observations.front().n == 1);
    CHECK(gap.observations.front().value == 1);  // rho(6) - rho(4) = 5 - 4
}
