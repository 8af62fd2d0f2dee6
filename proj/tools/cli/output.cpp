#include "output.hpp"

#include <sstream>

#include <json.hpp>

namespace reduxwords::cli {

std::optional<Format> parse_format(std::string_view name) {
    if (name == "raw") return Format::raw;
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "bfile") return Format::bfile;
    return std::nullopt;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
    switch (format) {
        case Format::csv:
            out << "n,value\n";
            for (const auto& r : records) out << r.n << ',' << r.value << '\n';
            return;
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : records) {
                arr.push_back({{"n", r.n},
                               {"value", r.value},
                               {"kind", r.kind},
                               {"sequence", r.sequence_id},
                               {"certified_window", r.certified_window}});
            }
            out << arr.dump() << '\n';
            return;
        }
        case Format::raw:
        case Format::text:
        case Format::bfile:
            for (const auto& r : records) out << r.n << ' ' << r.value << '\n';
            return;
    }
}

void write_extremes(std::ostream& out, const ExtremesTable& table, const std::string& sequence_id,
                    Format format) {
    switch (format) {
        case Format::csv:
            out << "n,min,max\n";
            for (std::size_t n = 1; n <= table.n_max(); ++n) {
                out << n << ',' << table.m(n) << ',' << table.M(n) << '\n';
            }
            return;
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t n = 1; n <= table.n_max(); ++n) {
                arr.push_back({{"n", n},
                               {"min", table.m(n)},
                               {"max", table.M(n)},
                               {"sequence", sequence_id},
                               {"certified_window", table.certified_window}});
            }
            out << arr.dump() << '\n';
            return;
        }
        default:
            for (std::size_t n = 1; n <= table.n_max(); ++n) {
                out << n << ' ' << table.m(n) << ' ' << table.M(n) << '\n';
            }
            return;
    }
}

std::vector<OutputRecord> profile_records(const ComplexityProfile& profile) {
    std::vector<OutputRecord> records;
    records.reserve(profile.n_max());
    for (std::size_t n = 1; n <= profile.n_max(); ++n) {
        records.push_back({n, static_cast<std::int64_t>(profile.at(n)),
                           std::string(to_string(profile.kind)), profile.sequence_id,
                           profile.certified_window});
    }
    return records;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> parse_records(const std::string& text,
                                                                  Format format) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> out;
    if (format == Format::json) {
        for (const auto& r : nlohmann::json::parse(text)) {
            out.emplace_back(r.at("n").get<std::uint64_t>(), r.at("value").get<std::int64_t>());
        }
        return out;
    }
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (format == Format::csv) {
            if (first) {
                first = false;
                if (line == "n,value") continue;
            }
            for (char& c : line) {
                if (c == ',') c = ' ';
            }
        }
        std::istringstream fields(line);
        std::uint64_t n = 0;
        std::int64_t v = 0;
        if (!(fields >> n >> v)) throw std::runtime_error("malformed record line: " + line);
        out.emplace_back(n, v);
    }
    return out;
}

}  // namespace reduxwords::cli
