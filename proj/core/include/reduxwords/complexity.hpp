#pragma once

// Brute-force complexity engine. Every count is taken over the distinct
// length-n windows of a finite prefix; the window policy decides how long
// that prefix is and certifies that the counts no longer move.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reduxwords/errors.hpp"
#include "reduxwords/sequence.hpp"

namespace reduxwords {

enum class ComplexityKind { factor, abelian, reduced_factor, reduced_abelian };

std::string_view to_string(ComplexityKind kind);
/// Accepts "factor", "abelian", "red", "abred" and the long names.
std::optional<ComplexityKind> parse_complexity_kind(std::string_view name);

/// Which key implementation classifies windows. `fast` uses the binary
/// run-count shortcuts when the alphabet is binary and falls back to
/// `general` otherwise; `general` builds canonical keys from words-core.
enum class KeyPath { fast, general };

struct WindowPolicy {
    enum class Mode { stabilize, fixed };

    std::size_t initial_multiplier = 32;
    std::size_t max_doublings = 6;
    Mode mode = Mode::stabilize;
    /// Explicit window; in fixed mode it replaces initial_multiplier * n_max.
    std::optional<std::size_t> fixed_window;

    std::size_t initial_window(std::size_t n_max) const;
};

struct ComplexityProfile {
    ComplexityKind kind = ComplexityKind::factor;
    std::string sequence_id;
    std::vector<std::uint64_t> values;  // values[n - 1] for n = 1..n_max
    std::size_t certified_window = 0;
    bool certified = false;  // false for fixed-mode scans

    std::size_t n_max() const noexcept { return values.size(); }
    std::uint64_t at(std::size_t n) const;
};

struct ExtremesTable {
    std::vector<std::size_t> min_alternations;  // m_n at index n - 1
    std::vector<std::size_t> max_alternations;  // M_n at index n - 1
    std::size_t certified_window = 0;
    bool certified = false;

    std::size_t n_max() const noexcept { return min_alternations.size(); }
    std::size_t m(std::size_t n) const;
    std::size_t M(std::size_t n) const;
};

/// Stabilization did not converge; carries the last scan.
class NotCertifiedError : public Error {
public:
    NotCertifiedError(const std::string& what, std::size_t last_window)
        : Error(what), last_window_(last_window) {}
    std::size_t last_window() const noexcept { return last_window_; }

private:
    std::size_t last_window_;
};

class ProfileNotCertified : public NotCertifiedError {
public:
    explicit ProfileNotCertified(ComplexityProfile partial);
    const ComplexityProfile& partial() const noexcept { return partial_; }

private:
    ComplexityProfile partial_;
};

class ExtremesNotCertified : public NotCertifiedError {
public:
    explicit ExtremesNotCertified(ExtremesTable partial);
    const ExtremesTable& partial() const noexcept { return partial_; }

private:
    ExtremesTable partial_;
};

/// prefix[i] = number of adjacent unequal pairs among word[0..i].
class AlternationPrefix {
public:
    explicit AlternationPrefix(std::span<const Symbol> word);

    std::size_t size() const noexcept { return counts_.size(); }
    std::uint32_t operator[](std::size_t i) const { return counts_[i]; }

    /// Alternations of the window word[start .. start + length - 1]
    /// (0-based start, length >= 1).
    std::uint32_t window(std::size_t start, std::size_t length) const {
        return counts_[start + length - 1] - counts_[start];
    }

private:
    std::vector<std::uint32_t> counts_;
};

// -- single-window scans (no certification) ----------------------------------

std::vector<std::uint64_t> scan_counts(std::span<const Symbol> prefix, std::size_t alphabet_size,
                                       ComplexityKind kind, std::size_t n_max,
                                       KeyPath path = KeyPath::fast);

/// Per-length distinct window counts from a suffix automaton.
std::vector<std::uint64_t> distinct_factor_counts(std::span<const Symbol> prefix,
                                                  std::size_t alphabet_size, std::size_t n_max);

ExtremesTable scan_extremes(std::span<const Symbol> prefix, std::size_t n_max);

/// realized[a] is true iff some length-n window has exactly a alternations.
std::vector<bool> realized_alternations(std::span<const Symbol> prefix, std::size_t n);

// -- certified engine --------------------------------------------------------

ComplexityProfile compute_profile(const SequenceHandle& h, ComplexityKind kind, std::size_t n_max,
                                  const WindowPolicy& policy = {},
                                  KeyPath path = KeyPath::fast);

ComplexityProfile factor_complexity(const SequenceHandle& h, std::size_t n_max,
                                    const WindowPolicy& policy = {});
ComplexityProfile abelian_complexity(const SequenceHandle& h, std::size_t n_max,
                                     const WindowPolicy& policy = {});
ComplexityProfile reduced_factor_complexity(const SequenceHandle& h, std::size_t n_max,
                                            const WindowPolicy& policy = {},
                                            KeyPath path = KeyPath::fast);
ComplexityProfile reduced_abelian_complexity(const SequenceHandle& h, std::size_t n_max,
                                             const WindowPolicy& policy = {},
                                             KeyPath path = KeyPath::fast);

ExtremesTable alternation_extremes(const SequenceHandle& h, std::size_t n_max,
                                   const WindowPolicy& policy = {});

/// 2 (M_n - m_n + 1): the reduced factor complexity of a complement-closed
/// binary sequence whose length-n alternation counts fill [m_n, M_n].
std::uint64_t reduced_complexity_from_extremes(const ExtremesTable& table, std::size_t n);

}  // namespace reduxwords
