#include "detail/suffix_automaton.hpp"

#include <algorithm>
#include <array>

namespace reduxwords::detail {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text) {
    std::array<std::int32_t, kMaxAlphabet> remap;
    remap.fill(-1);
    std::int32_t distinct = 0;
    for (Symbol s : text) {
        if (remap[s] < 0) remap[s] = distinct++;
    }
    sigma_ = std::max<std::size_t>(static_cast<std::size_t>(distinct), 1);

    const std::size_t max_states = 2 * text.size() + 1;
    len_.reserve(max_states);
    link_.reserve(max_states);
    next_.reserve(max_states * sigma_);

    len_.push_back(0);
    link_.push_back(-1);
    next_.resize(sigma_, -1);
    for (Symbol s : text) extend(static_cast<std::uint32_t>(remap[s]));
}

std::int32_t SuffixAutomaton::clone_state(std::int32_t q, std::uint32_t len) {
    const auto id = static_cast<std::int32_t>(len_.size());
    len_.push_back(len);
    link_.push_back(link_[q]);
    next_.resize(next_.size() + sigma_);
    std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q * sigma_), sigma_,
                next_.begin() + static_cast<std::ptrdiff_t>(id * sigma_));
    return id;
}

void SuffixAutomaton::extend(std::uint32_t c) {
    const auto cur = static_cast<std::int32_t>(len_.size());
    len_.push_back(len_[last_] + 1);
    link_.push_back(-1);
    next_.resize(next_.size() + sigma_, -1);

    std::int32_t p = last_;
    while (p != -1 && next_[p * sigma_ + c] == -1) {
        next_[p * sigma_ + c] = cur;
        p = link_[p];
    }
    if (p == -1) {
        link_[cur] = 0;
    } else {
        const std::int32_t q = next_[p * sigma_ + c];
        if (len_[p] + 1 == len_[q]) {
            link_[cur] = q;
        } else {
            const std::int32_t clone = clone_state(q, len_[p] + 1);
            while (p != -1 && next_[p * sigma_ + c] == q) {
                next_[p * sigma_ + c] = clone;
                p = link_[p];
            }
            link_[q] = clone;
            link_[cur] = clone;
        }
    }
    last_ = cur;
}

std::vector<std::uint64_t> SuffixAutomaton::distinct_by_length(std::size_t n_max) const {
    std::vector<std::int64_t> diff(n_max + 2, 0);
    for (std::size_t v = 1; v < len_.size(); ++v) {
        const std::size_t lo = len_[link_[v]] + 1;
        const std::size_t hi = std::min<std::size_t>(len_[v], n_max);
        if (lo > hi) continue;
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> out(n_max);
    std::int64_t running = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        running += diff[n];
        out[n - 1] = static_cast<std::uint64_t>(running);
    }
    return out;
}

}  // namespace reduxwords::detail
