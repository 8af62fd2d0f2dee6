#include "reduxwords/sequence.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

#include "reduxwords/errors.hpp"

namespace reduxwords {

struct SequenceHandle::State {
    std::string id;
    std::size_t alphabet_size;
    Generator generator;
    std::size_t cap;

    std::mutex mutex;
    PrefixData data;
};

SequenceHandle::SequenceHandle(std::string id, std::size_t alphabet_size,
                               Generator generator, std::size_t cap)
    : state_(std::make_shared<State>()) {
    if (alphabet_size == 0 || alphabet_size > kMaxAlphabet) {
        throw ConfigurationError("alphabet size must be in [1, 256]");
    }
    if (cap == 0) throw ConfigurationError("prefix cap must be positive");
    state_->id = std::move(id);
    state_->alphabet_size = alphabet_size;
    state_->generator = std::move(generator);
    state_->cap = cap;
}

const std::string& SequenceHandle::id() const noexcept { return state_->id; }
std::size_t SequenceHandle::alphabet_size() const noexcept { return state_->alphabet_size; }
std::size_t SequenceHandle::cap() const noexcept { return state_->cap; }

PrefixData SequenceHandle::materialize(std::size_t length) const {
    if (length > state_->cap) throw CapacityError(length, state_->cap);
    std::lock_guard lock(state_->mutex);
    const std::size_t have = state_->data ? state_->data->size() : 0;
    if (have >= length) return state_->data;

    const std::size_t target = std::min(state_->cap, std::max(length, 2 * have));
    auto symbols = state_->generator(target);
    if (symbols.size() != target) {
        throw ConfigurationError("generator for '" + state_->id +
                                 "' returned a prefix of the wrong length");
    }
    state_->data = std::make_shared<const std::vector<Symbol>>(std::move(symbols));
    return state_->data;
}

Symbol SequenceHandle::at(std::uint64_t n) const {
    if (n == 0) throw DomainError("sequence indices start at 1");
    return (*materialize(static_cast<std::size_t>(n)))[n - 1];
}

Word SequenceHandle::prefix(std::size_t length) const {
    if (length == 0) throw DomainError("prefix length must be >= 1");
    auto data = materialize(length);
    return Word(std::vector<Symbol>(data->begin(), data->begin() + length),
                state_->alphabet_size);
}

Symbol thue_morse_at(std::uint64_t n) {
    if (n == 0) throw DomainError("thue_morse_at: indices start at 1");
    return static_cast<Symbol>(std::popcount(n - 1) & 1);
}

Symbol paperfolding_at(std::uint64_t n) {
    if (n == 0) throw DomainError("paperfolding_at: indices start at 1");
    const std::uint64_t odd = n >> std::countr_zero(n);
    return odd % 4 == 1 ? 0 : 1;
}

// -- morphisms ---------------------------------------------------------------

Morphism::Morphism(std::size_t alphabet_size, std::map<Symbol, Word> images)
    : alphabet_size_(alphabet_size), images_(std::move(images)) {
    for (const auto& [s, img] : images_) {
        if (s >= alphabet_size_) {
            throw ConfigurationError("morphism image declared for out-of-alphabet symbol " +
                                     std::to_string(s));
        }
        if (img.empty()) {
            throw ConfigurationError("morphism image of " + std::to_string(s) + " is empty");
        }
        for (Symbol t : img) {
            if (t >= alphabet_size_) {
                throw ConfigurationError("morphism image of " + std::to_string(s) +
                                         " leaves the alphabet");
            }
        }
    }
}

const Word& Morphism::image(Symbol s) const {
    auto it = images_.find(s);
    if (it == images_.end()) {
        throw ConfigurationError("morphism has no image for symbol " + std::to_string(s));
    }
    return it->second;
}

Word Morphism::apply(const Word& w) const {
    std::vector<Symbol> out;
    for (Symbol s : w) {
        const Word& img = image(s);
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), alphabet_size_);
}

void Morphism::require_prolongable(Symbol seed) const {
    if (seed >= alphabet_size_) {
        throw ConfigurationError("seed outside alphabet");
    }
    auto it = images_.find(seed);
    if (it == images_.end() || it->second.size() < 2 || it->second.front() != seed) {
        throw ConfigurationError("morphism is not prolongable at seed " +
                                 std::to_string(seed));
    }
    std::set<Symbol> seen{seed};
    std::vector<Symbol> stack{seed};
    while (!stack.empty()) {
        Symbol s = stack.back();
        stack.pop_back();
        for (Symbol t : image(s)) {
            if (seen.insert(t).second) stack.push_back(t);
        }
    }
}

Morphism thue_morse_morphism() {
    return Morphism(2, {{0, Word{0, 1}}, {1, Word{1, 0}}});
}

// -- Toeplitz ------------------------------------------------------------------

Symbol ToeplitzSpec::filler_at(std::size_t k) const {
    if (k < preperiod.size()) return preperiod[k];
    return period[(k - preperiod.size()) % period.size()];
}

void ToeplitzSpec::validate() const {
    if (alphabet_size == 0 || alphabet_size > kMaxAlphabet) {
        throw ConfigurationError("toeplitz: alphabet size must be in [1, 256]");
    }
    if (period.empty()) throw ConfigurationError("toeplitz: filler period is empty");
    auto check = [this](const std::vector<Symbol>& part) {
        for (Symbol s : part) {
            if (s >= alphabet_size) throw ConfigurationError("toeplitz: filler leaves alphabet");
        }
    };
    check(preperiod);
    check(period);
}

ToeplitzSpec paperfolding_toeplitz() { return {2, {}, {0, 1}}; }

std::vector<std::optional<Symbol>> toeplitz_partial(const ToeplitzSpec& spec,
                                                     std::size_t length,
                                                     std::size_t passes) {
    spec.validate();
    std::vector<std::optional<Symbol>> cells(length);
    std::vector<std::size_t> gaps(length);
    for (std::size_t i = 0; i < length; ++i) gaps[i] = i;

    for (std::size_t pass = 0; pass < passes && !gaps.empty(); ++pass) {
        std::vector<std::size_t> remaining;
        remaining.reserve(gaps.size() / 2);
        for (std::size_t g = 0; g < gaps.size(); ++g) {
            if (g % 2 == 0) {
                cells[gaps[g]] = spec.filler_at(g / 2);
            } else {
                remaining.push_back(gaps[g]);
            }
        }
        gaps = std::move(remaining);
    }
    return cells;
}

// -- handles -------------------------------------------------------------------

SequenceHandle from_index_function(std::string id, std::size_t alphabet_size,
                                   std::function<Symbol(std::uint64_t)> fn,
                                   std::size_t cap) {
    auto gen = [fn = std::move(fn)](std::size_t length) {
        std::vector<Symbol> out(length);
        for (std::size_t i = 0; i < length; ++i) out[i] = fn(i + 1);
        return out;
    };
    return SequenceHandle(std::move(id), alphabet_size, std::move(gen), cap);
}

SequenceHandle thue_morse(std::size_t cap) {
    return from_index_function("tm", 2, thue_morse_at, cap);
}

SequenceHandle paperfolding(std::size_t cap) {
    return from_index_function("pf", 2, paperfolding_at, cap);
}

SequenceHandle morphic_fixed_point(const Morphism& m, Symbol seed, std::size_t cap,
                                   std::string id) {
    m.require_prolongable(seed);
    // x = m(x): the image of x[i] is appended while reading x[i]. The write
    // head stays ahead because m(seed) has length >= 2 and no image is empty.
    auto gen = [m, seed](std::size_t length) {
        std::vector<Symbol> out;
        out.reserve(length);
        const Word& first = m.image(seed);
        out.assign(first.begin(), first.end());
        for (std::size_t read = 1; out.size() < length; ++read) {
            const Word& img = m.image(out[read]);
            out.insert(out.end(), img.begin(), img.end());
        }
        out.resize(length);
        return out;
    };
    return SequenceHandle(std::move(id), m.alphabet_size(), std::move(gen), cap);
}

SequenceHandle toeplitz(const ToeplitzSpec& spec, std::size_t cap, std::string id) {
    spec.validate();
    auto gen = [spec](std::size_t length) {
        // Every pass fills at least half the gaps, so bit_width passes suffice.
        auto cells = toeplitz_partial(spec, length, std::bit_width(length) + 1);
        std::vector<Symbol> out(length);
        for (std::size_t i = 0; i < length; ++i) out[i] = *cells[i];
        return out;
    };
    return SequenceHandle(std::move(id), spec.alphabet_size, std::move(gen), cap);
}

std::optional<SequenceHandle> builtin_sequence(const std::string& name, std::size_t cap) {
    if (name == "tm" || name == "thue-morse") return thue_morse(cap);
    if (name == "pf" || name == "paperfolding") return paperfolding(cap);
    return std::nullopt;
}

}  // namespace reduxwords
