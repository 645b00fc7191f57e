#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/errors.hpp"
#include "permstat/stats.hpp"
#include "permstat/text.hpp"

namespace permstat::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
    std::string perm;
    std::vector<std::string> names;
    OutputFormat format = OutputFormat::Plain;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
    const auto parsed = parse_word(a.perm);
    const auto& w = parsed.word;
    const auto l = w.letters();
    const bool is_perm = std::all_of(l.begin(), l.end(), [&](Letter x) { return x <= l.size(); });

    std::vector<Statistic> wanted;
    if (a.names.empty()) {
        wanted = registry();
    } else {
        wanted = parse_statistics(a.names);
    }

    std::vector<Statistic> kept;
    std::vector<std::string> dropped;
    for (const auto& s : wanted) {
        if ((!is_perm && s.requires_permutation()) || (w.empty() && s.kind == StatKind::Ini)) {
            dropped.push_back(s.name());
        } else {
            kept.push_back(s);
        }
    }
    if (!dropped.empty()) {
        err << "note: omitted " << join(dropped, ',')
            << (w.empty() ? " (undefined on the empty word or needs a permutation)" : " (needs a permutation)") << '\n';
    }

    std::vector<std::pair<std::string, StatValue>> row;
    for (const auto& s : kept) {
        row.emplace_back(s.name(), is_perm ? evaluate(s, Permutation::from(w)) : evaluate(s, w));
    }

    switch (a.format) {
        case OutputFormat::Plain: {
            std::vector<std::string> cells;
            for (const auto& [k, v] : row) cells.push_back(k + "=" + std::to_string(v));
            out << join(cells, ' ') << '\n';
            break;
        }
        case OutputFormat::Csv: {
            std::vector<std::string> head{"word"}, vals{format_word(w, parsed.style)};
            for (const auto& [k, v] : row) {
                head.push_back(k);
                vals.push_back(std::to_string(v));
            }
            out << join(head, ',') << '\n' << join(vals, ',') << '\n';
            break;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["word"] = format_word(w, parsed.style);
            j["permutation"] = is_perm;
            ordered_json stats = ordered_json::object();
            for (const auto& [k, v] : row) stats[k] = v;
            j["stats"] = stats;
            out << j.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// map

struct MapArgs {
    std::string perm;
    bool phi = false;
    bool phi_inverse = false;
    bool psi = false;
    bool trace = false;
    OutputFormat format = OutputFormat::Plain;
};

int cmd_map(const MapArgs& a, std::ostream& out, std::ostream& err) {
    const auto parsed = parse_word(a.perm);
    const auto p = Permutation::from(parsed.word);
    const int chosen = int(a.phi) + int(a.phi_inverse) + int(a.psi);
    if (chosen != 1) {
        err << "error: choose exactly one of --phi, --phi-inverse, --psi\n";
        return kUsage;
    }

    Permutation image;
    std::string which;
    std::vector<std::string> trace;
    if (a.psi) {
        which = "psi";
        image = psi(p);
        DistinctWord w = p.word();
        for (const auto& step : psi_chain(p)) {
            w = complement_subword_on(w, step.letters);
            std::vector<std::string> members;
            for (Letter x : step.letters) members.push_back(std::to_string(x));
            trace.push_back(step.label + " {" + join(members, ',') + "} -> " + format_word(w, parsed.style));
        }
    } else {
        // The phi trace of the forward direction: for phi-inverse it is the
        // fold that rebuilds the input from the answer.
        which = a.phi ? "phi" : "phi-inverse";
        image = a.phi ? phi(p) : phi_inverse(p);
        const Permutation& source = a.phi ? p : image;
        const auto traces = phi_traces(source);
        DistinctWord state;
        const auto l = source.letters();
        for (std::size_t i = 0; i < traces.size(); ++i) {
            const Letter k = l[l.size() - 1 - i];
            const auto next = f_insert(k, state).word;
            trace.push_back("f(" + std::to_string(k) + "," + (state.empty() ? "-" : format_word(state, parsed.style)) +
                            ") = " + format_word(next, parsed.style) + " [" + traces[i].to_string() + "]");
            state = next;
        }
    }

    switch (a.format) {
        case OutputFormat::Plain:
            out << format_word(image, parsed.style) << '\n';
            if (a.trace)
                for (const auto& t : trace) out << t << '\n';
            break;
        case OutputFormat::Csv:
            out << "map,input,output\n" << which << ',' << format_word(p, parsed.style) << ','
                << format_word(image, parsed.style) << '\n';
            if (a.trace) err << "note: --trace is not rendered in csv output\n";
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["map"] = which;
            j["input"] = format_word(p, parsed.style);
            j["output"] = format_word(image, parsed.style);
            if (a.trace) j["trace"] = trace;
            out << j.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::size_t n = kDefaultSuiteCap;
    std::string suite = "all";
    bool allow_large = false;
    OutputFormat format = OutputFormat::Plain;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const std::size_t cap = size_cap_from_env();
    if (a.n > cap) {
        err << "error: n = " << a.n << " exceeds the enumeration cap " << cap << " (set PERMSTAT_NMAX to raise it)\n";
        return kCapExceeded;
    }
    if (a.n > kDefaultSuiteCap && !a.allow_large) {
        err << "error: n = " << a.n << " is above " << kDefaultSuiteCap << "; pass --allow-large to run it\n";
        return kCapExceeded;
    }
    const auto report = verify_suite(a.n, a.suite, cap);
    switch (a.format) {
        case OutputFormat::Plain:
            for (const auto& c : report.claims) {
                out << (c.passed ? "PASS " : "FAIL ") << c.id << " n=" << c.n_lo << ".." << c.n_hi
                    << " cases=" << c.cases;
                if (c.witness) out << " witness: " << *c.witness;
                out << '\n';
            }
            break;
        case OutputFormat::Csv:
            out << "claim_id,status,n_lo,n_hi,cases\n";
            for (const auto& c : report.claims) {
                out << c.id << ',' << (c.passed ? "pass" : "fail") << ',' << c.n_lo << ',' << c.n_hi << ','
                    << c.cases << '\n';
            }
            break;
        case OutputFormat::Json:
            out << report_to_json(report) << '\n';
            break;
    }
    if (!report.passed()) {
        err << "verification failed\n";
        return kVerifyFailed;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
    std::size_t n = 0;
    std::vector<std::string> stats;
    std::string source = "all";
    OutputFormat format = OutputFormat::Plain;
    std::size_t threads = 0;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    PermutationSource src = PermutationSource::all(a.n);
    if (a.source == "avoid321") src = PermutationSource::avoiding(a.n, Pattern::P321);
    else if (a.source == "avoid312") src = PermutationSource::avoiding(a.n, Pattern::P312);

    DistributionOptions opts;
    opts.cap = size_cap_from_env();
    opts.threads = a.threads;
    if (a.n > opts.cap) {
        err << "error: n = " << a.n << " exceeds the enumeration cap " << opts.cap
            << " (set PERMSTAT_NMAX to raise it)\n";
        return kCapExceeded;
    }
    const auto d = joint_distribution(src, a.stats, opts);

    switch (a.format) {
        case OutputFormat::Plain: {
            auto head = d.stat_names();
            head.push_back("count");
            out << join(head, ' ') << '\n';
            for (const auto& [values, count] : d.counts()) {
                std::vector<std::string> cells;
                for (auto v : values) cells.push_back(std::to_string(v));
                cells.push_back(std::to_string(count));
                out << join(cells, ' ') << '\n';
            }
            break;
        }
        case OutputFormat::Csv:
            out << table_to_csv(d);
            break;
        case OutputFormat::Json: {
            ordered_json j;
            j["schema"] = 1;
            j["n"] = a.n;
            j["source"] = a.source;
            j["stats"] = d.stat_names();
            j["total"] = d.total();
            j["rows"] = ordered_json::array();
            for (const auto& [values, count] : d.counts()) {
                j["rows"].push_back({{"values", values}, {"count", count}});
            }
            out << j.dump() << '\n';
            break;
        }
    }
    return kOk;
}

}  // namespace

std::string table_to_csv(const JointDistribution& d) {
    auto head = d.stat_names();
    head.push_back("count");
    std::string s = join(head, ',') + '\n';
    for (const auto& [values, count] : d.counts()) {
        for (auto v : values) s += std::to_string(v) + ',';
        s += std::to_string(count) + '\n';
    }
    return s;
}

JointDistribution table_from_csv(std::string_view csv) {
    auto split = [](std::string_view line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            cells.emplace_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return cells;
    };
    auto to_number = [](const std::string& cell) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
            throw ParseError("not a natural number: '" + cell + "'");
        }
        return v;
    };

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < csv.size()) {
        const auto nl = csv.find('\n', start);
        lines.push_back(csv.substr(start, nl - start));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError("missing header row");
    auto head = split(lines.front());
    if (head.empty() || head.back() != "count") throw ParseError("header must end with 'count'");
    head.pop_back();

    JointDistribution d(head);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto cells = split(lines[i]);
        if (cells.size() != head.size() + 1) throw ParseError("row " + std::to_string(i) + " has the wrong width");
        StatTuple t;
        for (std::size_t c = 0; c < head.size(); ++c) t.push_back(to_number(cells[c]));
        const auto count = to_number(cells.back());
        if (count == 0) throw ParseError("row " + std::to_string(i) + " has a zero count");
        if (d.counts().contains(t)) throw ParseError("row " + std::to_string(i) + " repeats a value tuple");
        d.add(t, count);
    }
    return d;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permstat: permutation statistics, bijections and equidistribution checks", "permstat"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* sub, OutputFormat& target) {
        sub->add_option("--format", target, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Statistics of one word or permutation");
    stats->add_option("perm", stats_args.perm, "Word in one-line notation (\"312\" or \"3 1 2\")")->required();
    stats->add_option("--names", stats_args.names, "Comma-separated statistic names")->delimiter(',');
    add_format(stats, stats_args.format);

    MapArgs map_args;
    auto* map = app.add_subcommand("map", "Apply phi, its inverse, or psi");
    map->add_option("perm", map_args.perm, "Permutation in one-line notation")->required();
    map->add_flag("--phi", map_args.phi, "Apply phi");
    map->add_flag("--phi-inverse", map_args.phi_inverse, "Apply the inverse of phi");
    map->add_flag("--psi", map_args.psi, "Apply psi");
    map->add_flag("--trace", map_args.trace, "Print the insertion trace or the psi chain");
    add_format(map, map_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify->add_option("--n", verify_args.n, "Largest size checked")->capture_default_str();
    verify->add_option("--suite", verify_args.suite, "Suite id")
        ->check(CLI::IsMember(suite_ids()))
        ->capture_default_str();
    verify->add_flag("--allow-large", verify_args.allow_large, "Allow n above the default suite cap");
    add_format(verify, verify_args.format);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Joint distribution table over a permutation class");
    table->add_option("--n", table_args.n, "Permutation size")->required();
    table->add_option("--stats", table_args.stats, "Comma-separated statistic names")->delimiter(',')->required();
    table->add_option("--source", table_args.source, "Permutation class")
        ->check(CLI::IsMember({"all", "avoid321", "avoid312"}))
        ->capture_default_str();
    table->add_option("--threads", table_args.threads, "Worker threads (0 = hardware)")->capture_default_str();
    add_format(table, table_args.format);

    std::vector<const char*> argv{"permstat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(stats_args, out, err);
        if (map->parsed()) return cmd_map(map_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
        if (table->parsed()) return cmd_table(table_args, out, err);
    } catch (const SizeCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace permstat::cli
