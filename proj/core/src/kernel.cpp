#include "reduxwords/kernel.hpp"

#include <string>

#include "reduxwords/errors.hpp"

namespace reduxwords {

std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    BigInt previous_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const BigInt& p = rows[rank][c];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const BigInt factor = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Every intermediate is a minor of the input, so the division is exact.
                rows[i][j] = (p * rows[i][j] - factor * rows[rank][j]) / previous_pivot;
            }
            rows[i][c] = 0;
        }
        previous_pivot = p;
        ++rank;
    }
    return rank;
}

KernelEstimate kernel_rank(std::span<const std::int64_t> values, unsigned base, unsigned depth,
                           std::size_t terms) {
    if (base < 2) throw DomainError("kernel_rank: base must be >= 2");
    if (terms == 0) throw DomainError("kernel_rank: terms must be >= 1");
    std::size_t span_needed = terms;
    for (unsigned e = 0; e < depth; ++e) span_needed *= base;
    if (values.size() < span_needed) {
        throw DomainError("kernel_rank: need " + std::to_string(span_needed) +
                          " values, have " + std::to_string(values.size()));
    }

    KernelEstimate estimate{base, depth, terms, {}, 0};
    std::vector<std::vector<BigInt>> rows;
    std::size_t power = 1;
    for (unsigned e = 0; e <= depth; ++e, power *= base) {
        for (std::size_t r = 0; r < power; ++r) {
            std::vector<BigInt> row(terms);
            for (std::size_t n = 0; n < terms; ++n) row[n] = values[power * n + r];
            rows.push_back(std::move(row));
        }
        estimate.rank_per_depth.push_back(exact_rank(rows));
    }
    estimate.subsequences_collected = rows.size();
    return estimate;
}

}  // namespace reduxwords
