#include <doctest.h>

#include <random>

#include "reduxwords/errors.hpp"
#include "reduxwords/word.hpp"

using namespace reduxwords;

namespace {

Word w(const char* digits, std::size_t alphabet = 2) { return Word::from_string(digits, alphabet); }

// Calls fn on every word over {0..alphabet-1} of the given length.
template <class Fn>
void for_each_word(std::size_t length, std::size_t alphabet, Fn fn) {
    std::vector<Symbol> s(length, 0);
    while (true) {
        fn(Word(s, alphabet));
        std::size_t i = 0;
        while (i < length && s[i] == alphabet - 1) s[i++] = 0;
        if (i == length) return;
        ++s[i];
    }
}

}  // namespace

TEST_CASE("reduce collapses runs") {
    CHECK(reduce(w("0010110")) == w("01010"));
    CHECK(reduce(w("0111010")) == w("01010"));
    CHECK(reduce(w("0")) == w("0"));
    CHECK(reduce(w("0101")) == w("0101"));
    CHECK(reduce(w("2201100", 3)) == w("2010", 3));
    CHECK_THROWS_AS(reduce(Word{}), DomainError);
}

TEST_CASE("run decomposition") {
    auto d = run_decomposition(w("0010110"));
    CHECK(d.run_symbols == w("01010"));
    CHECK(d.run_lengths == std::vector<std::size_t>{2, 1, 1, 2, 1});

    d = run_decomposition(w("000"));
    CHECK(d.run_symbols == w("0"));
    CHECK(d.run_lengths == std::vector<std::size_t>{3});

    d = run_decomposition(w("01"));
    CHECK(d.run_lengths == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(run_decomposition(Word{}), DomainError);
}

TEST_CASE("alternations") {
    CHECK(alternations(w("0110")) == 2);
    CHECK(alternations(w("0000")) == 0);
    CHECK(alternations(w("0010110")) == 4);
    CHECK_THROWS_AS(alternations(Word{}), DomainError);
}

TEST_CASE("trim first and last") {
    CHECK(trim_first(w("0110")) == w("110"));
    CHECK(trim_last(w("0110")) == w("011"));
    CHECK(trim_first(trim_last(w("0110"))) == w("11"));
    CHECK_THROWS_AS(trim_first(w("0")), DomainError);
    CHECK_THROWS_AS(trim_last(w("1")), DomainError);
}

TEST_CASE("equivalence keys") {
    CHECK(reduced_key(w("0010110")) == reduced_key(w("0111010")));
    CHECK(abelian_reduced_key(w("01")) == abelian_reduced_key(w("10")));
    CHECK(abelian_reduced_key(w("010")) != abelian_reduced_key(w("101")));
    CHECK(abelian_reduced_key(w("010")).reduced_parikh.counts == std::vector<std::size_t>{2, 1});
    CHECK(parikh(Word{}).total() == 0);
    CHECK(parikh(w("00121", 3)).counts == std::vector<std::size_t>{2, 2, 1});
    CHECK_THROWS_AS(reduced_key(Word{}), DomainError);
    CHECK_THROWS_AS(binary_reduced_key(w("012", 3)), DomainError);
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(Word({0, 2}, 2), DomainError);
    CHECK_THROWS_AS(Word::from_string("01a"), DomainError);
    CHECK(w("0120", 3).to_string() == "0120");
    CHECK(Word({10, 0}, 11).to_string() == "10,0");
}

TEST_CASE("exhaustive binary invariants up to length 12") {
    std::vector<Word> all;
    for (std::size_t len = 1; len <= 12; ++len) {
        for_each_word(len, 2, [&](const Word& x) {
            const Word r = reduce(x);
            CHECK(reduce(r) == r);
            CHECK(r.size() == alternations(x) + 1);
            CHECK(r.front() == x.front());
            CHECK(r.back() == x.back());
            for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] != r[i - 1]);
            const auto d = run_decomposition(x);
            CHECK(d.reconstruct() == x);
            CHECK(d.run_symbols == r);
        });
    }
    // Key characterizations, pairwise over a length-6 slice (all pairs).
    for (std::size_t la = 1; la <= 6; ++la) for_each_word(la, 2, [&](const Word& a) { all.push_back(a); });
    for (const Word& a : all) {
        for (const Word& b : all) {
            const bool same_red = reduced_key(a) == reduced_key(b);
            const auto ka = binary_reduced_key(a), kb = binary_reduced_key(b);
            CHECK(same_red == (ka.first == kb.first && ka.runs == kb.runs));

            const bool same_abred = abelian_reduced_key(a) == abelian_reduced_key(b);
            CHECK(same_abred == (binary_abelian_reduced_key(a) == binary_abelian_reduced_key(b)));
            if (ka.runs == kb.runs) {
                CHECK(same_abred == (ka.runs % 2 == 0 || a.front() == b.front()));
            }
        }
    }
}

TEST_CASE("binary fast keys agree with general keys for every word up to length 12") {
    // Equality of general keys is decided by (first, runs) for binary words,
    // so comparing each word's key against the canonical representative of
    // its (first, runs) class covers all pairs.
    for (std::size_t len = 1; len <= 12; ++len) {
        for_each_word(len, 2, [&](const Word& x) {
            const auto k = binary_reduced_key(x);
            std::vector<Symbol> rep(k.runs);
            for (std::size_t i = 0; i < k.runs; ++i) rep[i] = static_cast<Symbol>((k.first + i) % 2);
            CHECK(reduced_key(x).canonical == Word(rep, 2));
            const auto ab = abelian_reduced_key(x);
            CHECK(ab.reduced_length == k.runs);
            CHECK(ab.reduced_parikh.counts[k.first] == (k.runs + 1) / 2);
        });
    }
}

TEST_CASE("run reconstruction over alphabets up to 3, lengths up to 12") {
    for (std::size_t alphabet = 2; alphabet <= 3; ++alphabet) {
        for (std::size_t len = 1; len <= 12; ++len) {
            for_each_word(len, alphabet, [&](const Word& x) {
                const auto d = run_decomposition(x);
                REQUIRE(d.reconstruct() == x);
                REQUIRE(d.run_symbols == reduce(x));
            });
        }
    }
}

TEST_CASE("randomized properties on long words") {
    std::mt19937_64 rng(20261014);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t alphabet = 2 + rng() % 4;
        const std::size_t len = 1 + rng() % 200;
        std::vector<Symbol> s(len);
        // Bias toward repeats so long runs occur.
        for (std::size_t i = 0; i < len; ++i) {
            s[i] = (i > 0 && rng() % 3 == 0) ? s[i - 1] : static_cast<Symbol>(rng() % alphabet);
        }
        const Word x(s, alphabet);
        const Word r = reduce(x);
        CHECK(reduce(r) == r);
        CHECK(r.size() == alternations(x) + 1);
        CHECK(run_decomposition(x).reconstruct() == x);
        CHECK(parikh(x).total() == len);
        CHECK(abelian_reduced_key(x).reduced_parikh.total() == r.size());
        CHECK(complement(complement(x)) == x);
    }
}
