#include "reduxwords/word.hpp"

#include <numeric>

#include "reduxwords/errors.hpp"

namespace reduxwords {

namespace {

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) {
        throw DomainError(std::string(op) + ": word must be nonempty");
    }
}

void require_binary(const Word& w, const char* op) {
    if (w.alphabet_size() != 2) {
        throw DomainError(std::string(op) + ": binary alphabet required");
    }
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0 || alphabet_size_ > kMaxAlphabet) {
        throw DomainError("alphabet size must be in [1, 256]");
    }
    for (Symbol s : symbols_) {
        if (s >= alphabet_size_) {
            throw DomainError("symbol " + std::to_string(s) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_size_));
        }
    }
}

Word Word::from_string(std::string_view digits, std::size_t alphabet_size) {
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw DomainError(std::string("not a digit symbol: '") + c + "'");
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(symbols), alphabet_size);
}

std::string Word::to_string() const {
    std::string out;
    if (alphabet_size_ <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols_[i]);
    }
    return out;
}

Word RunDecomposition::reconstruct() const {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < run_lengths.size(); ++i) {
        out.insert(out.end(), run_lengths[i], run_symbols[i]);
    }
    return Word(std::move(out), run_symbols.alphabet_size());
}

std::size_t ParikhVector::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

Word reduce(const Word& w) {
    require_nonempty(w, "reduce");
    std::vector<Symbol> out;
    out.push_back(w.front());
    for (Symbol s : w) {
        if (s != out.back()) out.push_back(s);
    }
    return Word(std::move(out), w.alphabet_size());
}

RunDecomposition run_decomposition(const Word& w) {
    require_nonempty(w, "run_decomposition");
    std::vector<Symbol> symbols{w.front()};
    std::vector<std::size_t> lengths{0};
    for (Symbol s : w) {
        if (s != symbols.back()) {
            symbols.push_back(s);
            lengths.push_back(0);
        }
        ++lengths.back();
    }
    return {Word(std::move(symbols), w.alphabet_size()), std::move(lengths)};
}

std::size_t alternations(const Word& w) {
    require_nonempty(w, "alternations");
    std::size_t count = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != w[i - 1]) ++count;
    }
    return count;
}

Word trim_first(const Word& w) {
    if (w.size() < 2) throw DomainError("trim_first: word length must be >= 2");
    auto s = w.symbols();
    return Word(std::vector<Symbol>(s.begin() + 1, s.end()), w.alphabet_size());
}

Word trim_last(const Word& w) {
    if (w.size() < 2) throw DomainError("trim_last: word length must be >= 2");
    auto s = w.symbols();
    return Word(std::vector<Symbol>(s.begin(), s.end() - 1), w.alphabet_size());
}

ReducedKey reduced_key(const Word& w) { return {reduce(w)}; }

ParikhVector parikh(const Word& w) {
    ParikhVector p{std::vector<std::size_t>(w.alphabet_size(), 0)};
    for (Symbol s : w) ++p.counts[s];
    return p;
}

AbelianReducedKey abelian_reduced_key(const Word& w) {
    Word r = reduce(w);
    return {r.size(), parikh(r)};
}

BinaryReducedKey binary_reduced_key(const Word& w) {
    require_binary(w, "binary_reduced_key");
    return {w.front(), alternations(w) + 1};
}

BinaryAbelianReducedKey binary_abelian_reduced_key(const Word& w) {
    require_binary(w, "binary_abelian_reduced_key");
    std::size_t runs = alternations(w) + 1;
    if (runs % 2 == 0) return {runs, std::nullopt};
    return {runs, w.front()};
}

Word complement(const Word& w) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    const auto top = static_cast<Symbol>(w.alphabet_size() - 1);
    for (Symbol s : w) out.push_back(static_cast<Symbol>(top - s));
    return Word(std::move(out), w.alphabet_size());
}

}  // namespace reduxwords
