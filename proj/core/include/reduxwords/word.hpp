#pragma once

// Finite-word primitives: reduction, runs, alternations and the
// equivalence keys used to classify factors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reduxwords {

using Symbol = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 256;

/// A finite word over the alphabet {0, ..., alphabet_size - 1}.
class Word {
public:
    Word() = default;
    Word(std::vector<Symbol> symbols, std::size_t alphabet_size);
    Word(std::initializer_list<Symbol> symbols, std::size_t alphabet_size = 2)
        : Word(std::vector<Symbol>(symbols), alphabet_size) {}

    /// Parses a digit string such as "0010110". Each character is one symbol.
    static Word from_string(std::string_view digits, std::size_t alphabet_size = 2);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// Digit rendering for alphabets up to 10, comma separated otherwise.
    std::string to_string() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_ = 2;
};

struct RunDecomposition {
    Word run_symbols;
    std::vector<std::size_t> run_lengths;

    std::size_t run_count() const noexcept { return run_lengths.size(); }
    Word reconstruct() const;
};

struct ReducedKey {
    Word canonical;

    bool operator==(const ReducedKey&) const = default;
    auto operator<=>(const ReducedKey&) const = default;
};

struct ParikhVector {
    std::vector<std::size_t> counts;  // indexed by symbol

    std::size_t total() const noexcept;

    bool operator==(const ParikhVector&) const = default;
    auto operator<=>(const ParikhVector&) const = default;
};

struct AbelianReducedKey {
    std::size_t reduced_length = 0;
    ParikhVector reduced_parikh;

    bool operator==(const AbelianReducedKey&) const = default;
    auto operator<=>(const AbelianReducedKey&) const = default;
};

// Binary fast-path keys. A binary reduced word alternates, so it is fixed
// by its first symbol and its length (the run count).
struct BinaryReducedKey {
    Symbol first = 0;
    std::size_t runs = 0;

    bool operator==(const BinaryReducedKey&) const = default;
    auto operator<=>(const BinaryReducedKey&) const = default;
};

// With an even run count both letters occur equally often in red(w), so the
// first letter only matters for odd run counts.
struct BinaryAbelianReducedKey {
    std::size_t runs = 0;
    std::optional<Symbol> first;

    bool operator==(const BinaryAbelianReducedKey&) const = default;
    auto operator<=>(const BinaryAbelianReducedKey&) const = default;
};

Word reduce(const Word& w);
RunDecomposition run_decomposition(const Word& w);
std::size_t alternations(const Word& w);
Word trim_first(const Word& w);
Word trim_last(const Word& w);

ReducedKey reduced_key(const Word& w);
AbelianReducedKey abelian_reduced_key(const Word& w);
ParikhVector parikh(const Word& w);

BinaryReducedKey binary_reduced_key(const Word& w);
BinaryAbelianReducedKey binary_abelian_reduced_key(const Word& w);

/// Symbol-wise complement a -> (alphabet_size - 1 - a).
Word complement(const Word& w);

}  // namespace reduxwords
