#include "reduxwords/complexity.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <type_traits>

#include "detail/parallel.hpp"
#include "detail/suffix_automaton.hpp"

namespace reduxwords {

namespace {

constexpr std::size_t kMinLengthsPerWorker = 64;

bool is_binary(std::span<const Symbol> prefix, std::size_t alphabet_size) {
    if (alphabet_size <= 2) return true;
    return std::all_of(prefix.begin(), prefix.end(), [](Symbol s) { return s < 2; });
}

// Distinct-mark set over a dense key range; resetting is O(1) by bumping
// the generation stamp.
class MarkSet {
public:
    void reset(std::size_t range) {
        if (marks_.size() < range) marks_.resize(range, 0);
        ++stamp_;
        count_ = 0;
    }
    void insert(std::size_t key) {
        if (marks_[key] != stamp_) {
            marks_[key] = stamp_;
            ++count_;
        }
    }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::vector<std::uint32_t> marks_;
    std::uint32_t stamp_ = 0;
    std::uint64_t count_ = 0;
};

std::vector<std::uint64_t> binary_counts(std::span<const Symbol> x, ComplexityKind kind,
                                         std::size_t n_max) {
    const std::size_t L = x.size();
    std::vector<std::uint64_t> out(n_max, 0);
    AlternationPrefix alt(x);
    std::vector<std::uint32_t> ones(L + 1, 0);
    for (std::size_t i = 0; i < L; ++i) ones[i + 1] = ones[i] + x[i];

    detail::parallel_chunks(n_max, kMinLengthsPerWorker, [&](std::size_t lo, std::size_t hi) {
        MarkSet marks;
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t n = idx + 1;
            if (n > L) break;
            const std::size_t windows = L - n + 1;
            switch (kind) {
                case ComplexityKind::abelian:
                    marks.reset(n + 1);
                    for (std::size_t i = 0; i < windows; ++i) marks.insert(ones[i + n] - ones[i]);
                    break;
                case ComplexityKind::reduced_factor:
                    // key = (first symbol, alternation count)
                    marks.reset(2 * n);
                    for (std::size_t i = 0; i < windows; ++i) {
                        marks.insert(x[i] * n + alt.window(i, n));
                    }
                    break;
                case ComplexityKind::reduced_abelian:
                    // key = (run count, first symbol when the run count is odd)
                    marks.reset(2 * n + 2);
                    for (std::size_t i = 0; i < windows; ++i) {
                        const std::size_t runs = alt.window(i, n) + 1;
                        marks.insert(2 * runs + ((runs & 1) ? x[i] : 0));
                    }
                    break;
                case ComplexityKind::factor:
                    break;
            }
            out[idx] = marks.count();
        }
    });
    return out;
}

template <class KeyFn>
std::vector<std::uint64_t> keyed_counts(std::span<const Symbol> x, std::size_t alphabet_size,
                                        std::size_t n_max, KeyFn key_of) {
    const std::size_t L = x.size();
    std::vector<std::uint64_t> out(n_max, 0);
    detail::parallel_chunks(n_max, kMinLengthsPerWorker, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t n = idx + 1;
            if (n > L) break;
            std::set<decltype(key_of(Word{}))> keys;
            for (std::size_t i = 0; i + n <= L; ++i) {
                Word w(std::vector<Symbol>(x.begin() + i, x.begin() + i + n), alphabet_size);
                keys.insert(key_of(w));
            }
            out[idx] = keys.size();
        }
    });
    return out;
}

std::vector<std::uint64_t> sliding_abelian_counts(std::span<const Symbol> x,
                                                  std::size_t alphabet_size, std::size_t n_max) {
    const std::size_t L = x.size();
    std::vector<std::uint64_t> out(n_max, 0);
    detail::parallel_chunks(n_max, kMinLengthsPerWorker, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t n = idx + 1;
            if (n > L) break;
            std::vector<std::uint32_t> counts(alphabet_size, 0);
            for (std::size_t i = 0; i < n; ++i) ++counts[x[i]];
            std::set<std::vector<std::uint32_t>> keys{counts};
            for (std::size_t i = n; i < L; ++i) {
                --counts[x[i - n]];
                ++counts[x[i]];
                keys.insert(counts);
            }
            out[idx] = keys.size();
        }
    });
    return out;
}

void require_lengths(std::size_t n_max) {
    if (n_max == 0) throw DomainError("n_max must be >= 1");
}

template <class Scan, class Result>
Result certify(const SequenceHandle& h, std::size_t n_max, const WindowPolicy& policy, Scan scan) {
    require_lengths(n_max);
    std::size_t window = policy.initial_window(n_max);
    auto data = h.materialize(window);
    Result previous = scan(std::span<const Symbol>(data->data(), window));
    previous.certified_window = window;
    if (policy.mode == WindowPolicy::Mode::fixed) {
        previous.certified = false;
        return previous;
    }
    for (std::size_t d = 0; d < policy.max_doublings; ++d) {
        const std::size_t doubled = 2 * window;
        data = h.materialize(doubled);
        Result current = scan(std::span<const Symbol>(data->data(), doubled));
        current.certified_window = doubled;
        if (current.values_equal(previous)) {
            previous.certified = true;
            return previous;
        }
        previous = std::move(current);
        window = doubled;
    }
    if constexpr (std::is_base_of_v<ComplexityProfile, Result>) {
        throw ProfileNotCertified(std::move(previous));
    } else {
        throw ExtremesNotCertified(std::move(previous));
    }
}

struct ProfileScan : ComplexityProfile {
    bool values_equal(const ProfileScan& o) const { return values == o.values; }
};

struct ExtremesScan : ExtremesTable {
    bool values_equal(const ExtremesScan& o) const {
        return min_alternations == o.min_alternations && max_alternations == o.max_alternations;
    }
};

}  // namespace

std::string_view to_string(ComplexityKind kind) {
    switch (kind) {
        case ComplexityKind::factor: return "factor";
        case ComplexityKind::abelian: return "abelian";
        case ComplexityKind::reduced_factor: return "red";
        case ComplexityKind::reduced_abelian: return "abred";
    }
    return "?";
}

std::optional<ComplexityKind> parse_complexity_kind(std::string_view name) {
    if (name == "factor") return ComplexityKind::factor;
    if (name == "abelian" || name == "ab") return ComplexityKind::abelian;
    if (name == "red" || name == "reduced" || name == "reduced_factor") {
        return ComplexityKind::reduced_factor;
    }
    if (name == "abred" || name == "reduced_abelian") return ComplexityKind::reduced_abelian;
    return std::nullopt;
}

std::size_t WindowPolicy::initial_window(std::size_t n_max) const {
    if (initial_multiplier == 0) throw ConfigurationError("window multiplier must be positive");
    const std::size_t window = fixed_window ? *fixed_window : initial_multiplier * n_max;
    if (window < n_max) {
        throw ConfigurationError("window " + std::to_string(window) +
                                 " is shorter than n_max " + std::to_string(n_max));
    }
    return window;
}

std::uint64_t ComplexityProfile::at(std::size_t n) const {
    if (n == 0 || n > values.size()) throw DomainError("profile index out of range");
    return values[n - 1];
}

std::size_t ExtremesTable::m(std::size_t n) const {
    if (n == 0 || n > min_alternations.size()) throw DomainError("extremes index out of range");
    return min_alternations[n - 1];
}

std::size_t ExtremesTable::M(std::size_t n) const {
    if (n == 0 || n > max_alternations.size()) throw DomainError("extremes index out of range");
    return max_alternations[n - 1];
}

ProfileNotCertified::ProfileNotCertified(ComplexityProfile partial)
    : NotCertifiedError("complexity profile did not stabilize by window " +
                            std::to_string(partial.certified_window),
                        partial.certified_window),
      partial_(std::move(partial)) {}

ExtremesNotCertified::ExtremesNotCertified(ExtremesTable partial)
    : NotCertifiedError("alternation extremes did not stabilize by window " +
                            std::to_string(partial.certified_window),
                        partial.certified_window),
      partial_(std::move(partial)) {}

AlternationPrefix::AlternationPrefix(std::span<const Symbol> word) : counts_(word.size(), 0) {
    for (std::size_t i = 1; i < word.size(); ++i) {
        counts_[i] = counts_[i - 1] + (word[i] != word[i - 1] ? 1u : 0u);
    }
}

std::vector<std::uint64_t> distinct_factor_counts(std::span<const Symbol> prefix,
                                                  std::size_t alphabet_size, std::size_t n_max) {
    (void)alphabet_size;
    require_lengths(n_max);
    return detail::SuffixAutomaton(prefix).distinct_by_length(n_max);
}

std::vector<std::uint64_t> scan_counts(std::span<const Symbol> prefix, std::size_t alphabet_size,
                                       ComplexityKind kind, std::size_t n_max, KeyPath path) {
    require_lengths(n_max);
    if (path == KeyPath::fast) {
        if (kind == ComplexityKind::factor) {
            return distinct_factor_counts(prefix, alphabet_size, n_max);
        }
        if (is_binary(prefix, alphabet_size)) return binary_counts(prefix, kind, n_max);
        if (kind == ComplexityKind::abelian) {
            return sliding_abelian_counts(prefix, alphabet_size, n_max);
        }
    }
    switch (kind) {
        case ComplexityKind::factor:
            return keyed_counts(prefix, alphabet_size, n_max, [](const Word& w) { return w; });
        case ComplexityKind::abelian:
            return keyed_counts(prefix, alphabet_size, n_max, [](const Word& w) { return parikh(w); });
        case ComplexityKind::reduced_factor:
            return keyed_counts(prefix, alphabet_size, n_max,
                                [](const Word& w) { return reduced_key(w); });
        case ComplexityKind::reduced_abelian:
            return keyed_counts(prefix, alphabet_size, n_max,
                                [](const Word& w) { return abelian_reduced_key(w); });
    }
    return {};
}

ExtremesTable scan_extremes(std::span<const Symbol> prefix, std::size_t n_max) {
    require_lengths(n_max);
    if (prefix.size() < n_max) throw DomainError("prefix shorter than n_max");
    ExtremesTable table;
    table.min_alternations.assign(n_max, 0);
    table.max_alternations.assign(n_max, 0);
    AlternationPrefix alt(prefix);
    const std::size_t L = prefix.size();
    detail::parallel_chunks(n_max, kMinLengthsPerWorker, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t n = idx + 1;
            std::uint32_t lo_alt = alt.window(0, n), hi_alt = lo_alt;
            for (std::size_t i = 1; i + n <= L; ++i) {
                const std::uint32_t a = alt.window(i, n);
                lo_alt = std::min(lo_alt, a);
                hi_alt = std::max(hi_alt, a);
            }
            table.min_alternations[idx] = lo_alt;
            table.max_alternations[idx] = hi_alt;
        }
    });
    table.certified_window = L;
    return table;
}

std::vector<bool> realized_alternations(std::span<const Symbol> prefix, std::size_t n) {
    if (n == 0 || prefix.size() < n) throw DomainError("window length out of range");
    AlternationPrefix alt(prefix);
    std::vector<bool> realized(n, false);
    for (std::size_t i = 0; i + n <= prefix.size(); ++i) realized[alt.window(i, n)] = true;
    return realized;
}

ComplexityProfile compute_profile(const SequenceHandle& h, ComplexityKind kind, std::size_t n_max,
                                  const WindowPolicy& policy, KeyPath path) {
    auto scan = [&](std::span<const Symbol> prefix) {
        ProfileScan p;
        p.kind = kind;
        p.sequence_id = h.id();
        p.values = scan_counts(prefix, h.alphabet_size(), kind, n_max, path);
        return p;
    };
    ProfileScan result = certify<decltype(scan), ProfileScan>(h, n_max, policy, scan);
    return static_cast<ComplexityProfile&&>(std::move(result));
}

ComplexityProfile factor_complexity(const SequenceHandle& h, std::size_t n_max,
                                    const WindowPolicy& policy) {
    return compute_profile(h, ComplexityKind::factor, n_max, policy);
}

ComplexityProfile abelian_complexity(const SequenceHandle& h, std::size_t n_max,
                                     const WindowPolicy& policy) {
    return compute_profile(h, ComplexityKind::abelian, n_max, policy);
}

ComplexityProfile reduced_factor_complexity(const SequenceHandle& h, std::size_t n_max,
                                            const WindowPolicy& policy, KeyPath path) {
    return compute_profile(h, ComplexityKind::reduced_factor, n_max, policy, path);
}

ComplexityProfile reduced_abelian_complexity(const SequenceHandle& h, std::size_t n_max,
                                             const WindowPolicy& policy, KeyPath path) {
    return compute_profile(h, ComplexityKind::reduced_abelian, n_max, policy, path);
}

ExtremesTable alternation_extremes(const SequenceHandle& h, std::size_t n_max,
                                   const WindowPolicy& policy) {
    auto scan = [&](std::span<const Symbol> prefix) {
        ExtremesScan t;
        static_cast<ExtremesTable&>(t) = scan_extremes(prefix, n_max);
        return t;
    };
    ExtremesScan result = certify<decltype(scan), ExtremesScan>(h, n_max, policy, scan);
    return static_cast<ExtremesTable&&>(std::move(result));
}

std::uint64_t reduced_complexity_from_extremes(const ExtremesTable& table, std::size_t n) {
    return 2 * (static_cast<std::uint64_t>(table.M(n)) - table.m(n) + 1);
}

}  // namespace reduxwords
