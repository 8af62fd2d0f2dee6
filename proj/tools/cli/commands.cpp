#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"
#include "reduxwords/kernel.hpp"
#include "reduxwords/theorems.hpp"

namespace reduxwords::cli {

namespace {

struct PolicyFlags {
    std::size_t multiplier = 32;
    std::size_t max_doublings = 6;
    std::size_t fixed_window = 0;

    void attach(CLI::App& sub) {
        sub.add_option("--window-multiplier", multiplier,
                       "initial prefix length = multiplier * n_max")
            ->check(CLI::PositiveNumber);
        sub.add_option("--max-doublings", max_doublings,
                       "doublings allowed before certification fails");
        sub.add_option("--fixed-window", fixed_window,
                       "scan exactly this prefix length, no stabilization");
    }

    WindowPolicy policy() const {
        WindowPolicy p;
        p.initial_multiplier = multiplier;
        p.max_doublings = max_doublings;
        if (fixed_window > 0) {
            p.mode = WindowPolicy::Mode::fixed;
            p.fixed_window = fixed_window;
        }
        return p;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t prefix_cap() {
    const char* env = std::getenv("REDUXWORDS_MAX_PREFIX");
    if (!env || !*env) return kDefaultPrefixCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
        throw UsageError(std::string("REDUXWORDS_MAX_PREFIX must be a positive integer, got '") +
                         env + "'");
    }
    return static_cast<std::size_t>(v);
}

SequenceHandle resolve_sequence(const std::string& id) {
    const std::size_t cap = prefix_cap();
    if (auto h = builtin_sequence(id, cap)) return *h;
    return load_sequence_spec(id, cap);
}

Format resolve_format(const std::string& name) {
    auto f = parse_format(name);
    if (!f) throw UsageError("unknown format '" + name + "'");
    return *f;
}

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json cx = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        cx.push_back({{"n", c.n}, {"expected", c.expected}, {"actual", c.actual},
                      {"detail", c.detail}});
    }
    nlohmann::json obs = nlohmann::json::array();
    for (const auto& o : r.observations) obs.push_back({{"n", o.n}, {"value", o.value}});
    return {{"claim", r.claim_id},
            {"kind", r.conjecture ? "conjecture" : "theorem"},
            {"range", {r.n_lo, r.n_hi}},
            {"status", std::string(to_string(r.status))},
            {"counterexamples", cx},
            {"declared_exceptions", r.declared_exceptions},
            {"observations", obs},
            {"certified_window", r.certified_window}};
}

int emit_report(const VerificationReport& r, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << report_json(r).dump() << '\n';
    } else {
        out << (r.conjecture ? "conjecture " : "claim ") << r.claim_id << ": "
            << to_string(r.status) << "  range [" << r.n_lo << ", " << r.n_hi << "]";
        if (r.certified_window) out << "  window " << r.certified_window;
        out << '\n';
        if (!r.declared_exceptions.empty()) {
            out << "declared exceptions:";
            for (auto n : r.declared_exceptions) out << ' ' << n;
            out << '\n';
        }
        out << "counterexamples: " << r.counterexamples.size() << '\n';
        for (const auto& c : r.counterexamples) {
            out << "  n=" << c.n << " expected=" << c.expected << " actual=" << c.actual;
            if (!c.detail.empty()) out << " (" << c.detail << ')';
            out << '\n';
        }
        if (r.claim_id == "conj_mod4_gap" && !r.observations.empty()) {
            out << "nonzero gap signs (n:sign):";
            for (const auto& o : r.observations) out << ' ' << o.n << ':' << (o.value > 0 ? '+' : '-');
            out << '\n';
        }
    }
    return r.passed() ? kExitOk : kExitCounterexample;
}

std::vector<std::int64_t> read_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open profile file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    const Format format = first != std::string::npos && text[first] == '['
                              ? Format::json
                              : (text.starts_with("n,value") ? Format::csv : Format::bfile);
    std::vector<std::int64_t> values;
    std::uint64_t expected_n = 0;
    for (const auto& [n, v] : parse_records(text, format)) {
        if (expected_n != 0 && n != expected_n) {
            throw UsageError("profile file indices must be consecutive");
        }
        expected_n = n + 1;
        values.push_back(v);
    }
    return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduced factor and abelian complexities of infinite words.\n"
                 "All sequence indices are 1-based."};
    app.name("reduxwords");
    app.require_subcommand(1);

    std::string seq_id, kind_name, claim_id, profile_path;
    std::string gen_fmt = "raw", cx_fmt = "bfile", ex_fmt = "bfile", ve_fmt = "text",
                cj_fmt = "text", ke_fmt = "text";
    std::uint64_t start = 1, count = 0;
    std::size_t n_max = 0;
    unsigned base = 2, depth = 4;
    std::size_t terms = 64;
    PolicyFlags flags;

    auto* gen = app.add_subcommand("gen", "emit sequence symbols [start, start+count-1]");
    gen->add_option("sequence", seq_id, "tm, pf, or a sequence spec file")->required();
    gen->add_option("--start", start, "first 1-based index")->check(CLI::PositiveNumber);
    gen->add_option("--count", count, "number of symbols")->required();
    gen->add_option("--format", gen_fmt, "raw, csv, json or bfile")->capture_default_str();

    auto* cx = app.add_subcommand("complexity", "complexity profile for n = 1..n_max");
    cx->add_option("sequence", seq_id, "tm, pf, or a sequence spec file")->required();
    cx->add_option("kind", kind_name, "factor, abelian, red or abred")->required();
    cx->add_option("--n-max", n_max, "largest length")->required()->check(CLI::PositiveNumber);
    cx->add_option("--format", cx_fmt, "bfile, csv or json")->capture_default_str();
    flags.attach(*cx);

    auto* ex = app.add_subcommand("extremes", "min/max alternations m_n, M_n");
    ex->add_option("sequence", seq_id, "tm, pf, or a sequence spec file")->required();
    ex->add_option("--n-max", n_max, "largest length")->required()->check(CLI::PositiveNumber);
    ex->add_option("--format", ex_fmt, "bfile, csv or json")->capture_default_str();
    flags.attach(*ex);

    auto* ve = app.add_subcommand("verify", "check a registered claim against the engine");
    ve->add_option("claim", claim_id, "claim id (see `claims`)")->required();
    ve->add_option("--n-max", n_max, "largest n checked")->required()->check(CLI::PositiveNumber);
    ve->add_option("--format", ve_fmt, "text or json")->capture_default_str();
    flags.attach(*ve);

    auto* cj = app.add_subcommand("conjecture", "scan an open conjecture for counterexamples");
    cj->add_option("id", claim_id, "conj_odd_halving or conj_mod4_gap")->required();
    cj->add_option("--n-max", n_max, "largest n scanned")->required()->check(CLI::PositiveNumber);
    cj->add_option("--format", cj_fmt, "text or json")->capture_default_str();
    flags.attach(*cj);

    auto* ke = app.add_subcommand("kernel", "empirical k-kernel rank of a profile");
    ke->add_option("sequence", seq_id, "tm, pf, or a sequence spec file");
    ke->add_option("--kind", kind_name, "symbols, factor, abelian, red or abred")
        ->default_val("red");
    ke->add_option("--profile", profile_path, "read values from a b-file/csv/json instead");
    ke->add_option("--base", base, "kernel base k")->check(CLI::Range(2u, 16u));
    ke->add_option("--depth", depth, "largest exponent e");
    ke->add_option("--terms", terms, "terms per subsequence")->check(CLI::PositiveNumber);
    ke->add_option("--format", ke_fmt, "text or json")->capture_default_str();
    flags.attach(*ke);

    auto* cl = app.add_subcommand("claims", "list registered claim ids");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::string& format_name = gen->parsed()  ? gen_fmt
                                         : cx->parsed() ? cx_fmt
                                         : ex->parsed() ? ex_fmt
                                         : ve->parsed() ? ve_fmt
                                         : cj->parsed() ? cj_fmt
                                                        : ke_fmt;
        const Format format = resolve_format(format_name);

        if (gen->parsed()) {
            if (count == 0) return kExitOk;
            const SequenceHandle h = resolve_sequence(seq_id);
            const auto data = h.materialize(static_cast<std::size_t>(start + count - 1));
            if (format == Format::raw) {
                const Word w(std::vector<Symbol>(data->begin() + (start - 1),
                                                 data->begin() + (start - 1 + count)),
                             h.alphabet_size());
                out << w.to_string() << '\n';
                return kExitOk;
            }
            std::vector<OutputRecord> records;
            for (std::uint64_t n = start; n < start + count; ++n) {
                records.push_back({n, (*data)[n - 1], "symbol", h.id(), 0});
            }
            write_records(out, records, format);
            return kExitOk;
        }

        if (cx->parsed()) {
            const auto kind = parse_complexity_kind(kind_name);
            if (!kind) throw UsageError("unknown complexity kind '" + kind_name + "'");
            const SequenceHandle h = resolve_sequence(seq_id);
            try {
                write_records(out, profile_records(compute_profile(h, *kind, n_max, flags.policy())),
                              format);
            } catch (const ProfileNotCertified& e) {
                err << "error: " << e.what() << "\n# partial results (not certified):\n";
                write_records(err, profile_records(e.partial()), format);
                return kExitNotCertified;
            }
            return kExitOk;
        }

        if (ex->parsed()) {
            const SequenceHandle h = resolve_sequence(seq_id);
            try {
                write_extremes(out, alternation_extremes(h, n_max, flags.policy()), h.id(), format);
            } catch (const ExtremesNotCertified& e) {
                err << "error: " << e.what() << "\n# partial results (not certified):\n";
                write_extremes(err, e.partial(), h.id(), format);
                return kExitNotCertified;
            }
            return kExitOk;
        }

        if (ve->parsed() || cj->parsed()) {
            if (cj->parsed() && !is_conjecture(claim_id)) {
                throw UsageError("'" + claim_id + "' is not a conjecture id");
            }
            return emit_report(verify(claim_id, n_max, flags.policy()), format, out);
        }

        if (ke->parsed()) {
            std::vector<std::int64_t> values;
            std::size_t needed = terms;
            for (unsigned e = 0; e < depth; ++e) needed *= base;
            if (!profile_path.empty()) {
                values = read_profile_file(profile_path);
            } else {
                if (seq_id.empty()) throw UsageError("kernel needs a sequence or --profile");
                const SequenceHandle h = resolve_sequence(seq_id);
                if (kind_name == "symbols") {
                    const auto data = h.materialize(needed);
                    values.assign(data->begin(), data->begin() + needed);
                } else {
                    const auto kind = parse_complexity_kind(kind_name);
                    if (!kind) throw UsageError("unknown complexity kind '" + kind_name + "'");
                    for (auto v : compute_profile(h, *kind, needed, flags.policy()).values) {
                        values.push_back(static_cast<std::int64_t>(v));
                    }
                }
            }
            const KernelEstimate k = kernel_rank(values, base, depth, terms);
            if (format == Format::json) {
                out << nlohmann::json{{"base", k.base},
                                      {"depth", k.depth},
                                      {"terms", k.terms},
                                      {"rank_per_depth", k.rank_per_depth},
                                      {"subsequences", k.subsequences_collected}}
                           .dump()
                    << '\n';
            } else {
                out << "base " << k.base << ", terms " << k.terms << ", subsequences "
                    << k.subsequences_collected << '\n';
                for (std::size_t e = 0; e < k.rank_per_depth.size(); ++e) {
                    out << "depth " << e << ": rank " << k.rank_per_depth[e] << '\n';
                }
            }
            return kExitOk;
        }

        if (cl->parsed()) {
            for (const auto& id : registered_claims()) {
                out << id << (is_conjecture(id) ? "  (conjecture)" : "") << '\n';
            }
            return kExitOk;
        }
    } catch (const NotCertifiedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotCertified;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotCertified;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        // configuration, domain and unknown-claim errors
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace reduxwords::cli
