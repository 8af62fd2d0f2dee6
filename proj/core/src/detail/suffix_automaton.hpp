#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reduxwords/word.hpp"

namespace reduxwords::detail {

// Online suffix automaton over a remapped dense alphabet. Each non-initial
// state stands for the substrings of lengths (len(link), len].
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::span<const Symbol> text);

    std::size_t state_count() const noexcept { return len_.size(); }

    /// counts[n - 1] = number of distinct substrings of length n.
    std::vector<std::uint64_t> distinct_by_length(std::size_t n_max) const;

private:
    void extend(std::uint32_t c);
    std::int32_t clone_state(std::int32_t q, std::uint32_t len);

    std::size_t sigma_ = 1;
    std::vector<std::uint32_t> len_;
    std::vector<std::int32_t> link_;
    std::vector<std::int32_t> next_;  // state * sigma_ + c
    std::int32_t last_ = 0;
};

}  // namespace reduxwords::detail
