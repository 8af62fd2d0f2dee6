#pragma once

// Empirical k-kernel rank of an integer sequence: the rank of the span of
// the truncated subsequences n -> a(k^e n + r), 0 <= e <= depth, 0 <= r < k^e.
// A sequence is k-regular iff this span is finitely generated, so a rank
// that stops growing with depth is (finite) evidence of k-regularity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reduxwords {

using BigInt = boost::multiprecision::cpp_int;

struct KernelEstimate {
    unsigned base = 2;
    unsigned depth = 0;
    std::size_t terms = 0;
    std::vector<std::size_t> rank_per_depth;  // index e = 0..depth
    std::size_t subsequences_collected = 0;
};

/// values are a(0), a(1), ...; requires values.size() >= base^depth * terms.
KernelEstimate kernel_rank(std::span<const std::int64_t> values, unsigned base, unsigned depth,
                           std::size_t terms);

/// Exact rank by fraction-free (Bareiss) elimination. Rows are consumed.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace reduxwords
