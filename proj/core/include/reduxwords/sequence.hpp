#pragma once

// Infinite sequences: the Thue-Morse word t, the regular paperfolding word f,
// and generic morphic fixed points and Toeplitz constructions.
//
// All public indices are 1-based: at(1) is the initial term.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reduxwords/word.hpp"

namespace reduxwords {

inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 26;

/// Immutable view of a materialized prefix (0-based storage).
using PrefixData = std::shared_ptr<const std::vector<Symbol>>;

/// A lazily materialized infinite sequence. Copies share one cache; the
/// cache grows by doubling and never beyond cap().
class SequenceHandle {
public:
    /// Produces the first `length` symbols. Must be deterministic.
    using Generator = std::function<std::vector<Symbol>(std::size_t length)>;

    SequenceHandle(std::string id, std::size_t alphabet_size, Generator generator,
                   std::size_t cap = kDefaultPrefixCap);

    const std::string& id() const noexcept;
    std::size_t alphabet_size() const noexcept;
    std::size_t cap() const noexcept;

    /// Symbol at 1-based index n.
    Symbol at(std::uint64_t n) const;

    /// h[1..length] as a word.
    Word prefix(std::size_t length) const;

    /// Shared snapshot holding at least `length` symbols.
    PrefixData materialize(std::size_t length) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// t_n: parity of the number of 1 bits of n - 1.
Symbol thue_morse_at(std::uint64_t n);

/// f_n: 0 when the odd part of n is 1 mod 4, otherwise 1.
Symbol paperfolding_at(std::uint64_t n);

class Morphism {
public:
    Morphism(std::size_t alphabet_size, std::map<Symbol, Word> images);

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    const std::map<Symbol, Word>& images() const noexcept { return images_; }
    const Word& image(Symbol s) const;

    Word apply(const Word& w) const;

    /// Throws ConfigurationError unless seed -> seed u with u nonempty and
    /// every symbol reachable from seed has an image.
    void require_prolongable(Symbol seed) const;

private:
    std::size_t alphabet_size_;
    std::map<Symbol, Word> images_;
};

/// 0 -> 01, 1 -> 10.
Morphism thue_morse_morphism();

/// Toeplitz gap filling. Each pass writes filler symbols (preperiod, then
/// period repeated) into every other remaining gap, starting with the first
/// gap; the filler restarts at its beginning on every pass.
struct ToeplitzSpec {
    std::size_t alphabet_size = 2;
    std::vector<Symbol> preperiod;
    std::vector<Symbol> period;

    Symbol filler_at(std::size_t k) const;
    void validate() const;
};

/// Alternating 0, 1 filler; its limit is the paperfolding word.
ToeplitzSpec paperfolding_toeplitz();

/// State of the first `length` cells after `passes` Toeplitz passes;
/// nullopt marks a gap.
std::vector<std::optional<Symbol>> toeplitz_partial(const ToeplitzSpec& spec,
                                                     std::size_t length,
                                                     std::size_t passes);

SequenceHandle thue_morse(std::size_t cap = kDefaultPrefixCap);
SequenceHandle paperfolding(std::size_t cap = kDefaultPrefixCap);
SequenceHandle morphic_fixed_point(const Morphism& m, Symbol seed,
                                   std::size_t cap = kDefaultPrefixCap,
                                   std::string id = "morphic");
SequenceHandle toeplitz(const ToeplitzSpec& spec, std::size_t cap = kDefaultPrefixCap,
                        std::string id = "toeplitz");

/// Arithmetic definition evaluated index by index; fn receives 1-based n.
SequenceHandle from_index_function(std::string id, std::size_t alphabet_size,
                                   std::function<Symbol(std::uint64_t)> fn,
                                   std::size_t cap = kDefaultPrefixCap);

/// "tm"/"thue-morse" or "pf"/"paperfolding"; nullopt for anything else.
std::optional<SequenceHandle> builtin_sequence(const std::string& name,
                                               std::size_t cap = kDefaultPrefixCap);

/// Parses a sequence spec file body (key = value lines).
///
///   kind = morphic | toeplitz | builtin
///   alphabet = 2
///   seed = 0               (morphic)
///   image.0 = 01           (morphic, one line per symbol)
///   preperiod =            (toeplitz, optional)
///   period = 01            (toeplitz)
///   name = tm              (builtin)
///   id = my-sequence       (optional display id)
///
/// Symbol lists are digit strings, or comma/space separated integers when
/// the alphabet exceeds 10. '#' starts a comment.
SequenceHandle parse_sequence_spec(const std::string& text,
                                   std::size_t cap = kDefaultPrefixCap);
SequenceHandle load_sequence_spec(const std::string& path,
                                  std::size_t cap = kDefaultPrefixCap);

}  // namespace reduxwords
