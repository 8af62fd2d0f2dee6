#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reduxwords/complexity.hpp"

namespace reduxwords::cli {

enum class Format { raw, text, csv, json, bfile };

std::optional<Format> parse_format(std::string_view name);

struct OutputRecord {
    std::uint64_t n = 0;
    std::int64_t value = 0;
    std::string kind;
    std::string sequence_id;
    std::size_t certified_window = 0;
};

/// csv: "n,value" header then rows; bfile: "n value" lines, no header;
/// json: array of record objects. Records must be in increasing n.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

void write_extremes(std::ostream& out, const ExtremesTable& table, const std::string& sequence_id,
                    Format format);

std::vector<OutputRecord> profile_records(const ComplexityProfile& profile);

/// Reads back (n, value) pairs from csv, bfile or json text.
std::vector<std::pair<std::uint64_t, std::int64_t>> parse_records(const std::string& text,
                                                                  Format format);

}  // namespace reduxwords::cli
