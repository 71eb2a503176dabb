#include "abelian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelian/lcg.hpp"
#include "abelian/offline_runs.hpp"
#include "abelian/online_runs.hpp"
#include "abelian/oracle.hpp"
#include "abelian/period_spec.hpp"

namespace abelian::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Byte source over a file or `in`. Unless raw, one trailing newline is
/// dropped: a newline is held back until another byte follows it.
class InputSource {
public:
    InputSource(const std::string& path, std::istream& in, bool raw) : raw_(raw) {
        if (path == "-") {
            stream_ = &in;
        } else {
            file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
            if (!*file_) throw IoError("cannot open '" + path + "'");
            stream_ = file_.get();
        }
    }

    bool next(char& c) {
        if (!read(c)) return false;
        if (raw_ || c != '\n') return true;
        char following;
        if (!read(following)) return false;
        lookahead_ = following;
        return true;
    }

    std::string read_all() {
        std::string text;
        char c;
        while (next(c)) text.push_back(c);
        return text;
    }

private:
    bool read(char& c) {
        if (lookahead_) {
            c = *lookahead_;
            lookahead_.reset();
            return true;
        }
        if (stream_->get(c)) return true;
        if (stream_->bad()) throw IoError("read failure");
        return false;
    }

    bool raw_;
    std::unique_ptr<std::ifstream> file_;
    std::istream* stream_ = nullptr;
    std::optional<char> lookahead_;
};

std::string read_input(const std::string& path, std::istream& in, bool raw) {
    return InputSource(path, in, raw).read_all();
}

void write_record(std::ostream& out, const RunOccurrence& r, bool json, std::optional<std::size_t> p = {}) {
    if (json) {
        nlohmann::ordered_json j;
        if (p) j["p"] = *p;
        j["b"] = r.b;
        j["h"] = r.h;
        j["t"] = r.t;
        j["e"] = r.e;
        out << j.dump() << '\n';
        return;
    }
    if (p) out << *p << '\t';
    out << r.b << '\t' << r.h << '\t' << r.t << '\t' << r.e << '\n';
}

struct Interned {
    Alphabet alphabet;
    Word word;
    ParikhVector period;
};

Interned intern_with_period(const std::string& text, const PeriodSpec& spec) {
    auto [alphabet, word] = intern(text, spec.symbols());
    ParikhVector period = spec.to_vector(alphabet);
    return {std::move(alphabet), std::move(word), std::move(period)};
}

// --- find ------------------------------------------------------------------

struct FindOptions {
    std::string period;
    std::string input = "-";
    std::string engine = "online";
    bool stream = false;
    bool trace = false;
    bool json = false;
    bool raw = false;
};

int cmd_find(const FindOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const PeriodSpec spec = PeriodSpec::parse(o.period);
    if (o.engine == "oracle") {
        const Interned data = intern_with_period(read_input(o.input, in, o.raw), spec);
        auto result = oracle::oracle_runs(data.period, data.word);
        std::sort(result.runs.begin(), result.runs.end(), [](auto& x, auto& y) { return x.e < y.e; });
        for (const auto& r : result.runs) write_record(out, r, o.json);
        return exit_ok;
    }

    Alphabet alphabet;
    for (char c : spec.symbols()) alphabet.intern(c);
    OnlineScanner scanner(spec.to_vector(alphabet));
    if (o.trace)
        scanner.set_trace([&err](Position i, const RunOccurrence& r) {
            err << "candidate\t" << i << '\t' << r.b << '\t' << r.h << '\t' << r.t << '\t' << r.e << '\n';
        });
    auto emit = [&](const std::optional<RunOccurrence>& run) {
        if (!run) return;
        write_record(out, *run, o.json);
        if (o.stream) out.flush();
    };
    InputSource source(o.input, in, o.raw);
    char c;
    while (source.next(c)) emit(scanner.push(alphabet.intern(c)));
    emit(scanner.finish());
    return exit_ok;
}

// --- all-runs --------------------------------------------------------------

struct AllRunsOptions {
    std::string input = "-";
    std::string engine = "offline";
    bool dump_table = false;
    bool serial = false;
    bool json = false;
    bool raw = false;
};

std::vector<OfflineRun> oracle_offline(std::span<const Symbol> w) {
    std::vector<OfflineRun> out;
    for (const Repetition& rep : oracle::oracle_all_repetitions(w)) out.push_back(oracle::oracle_extend(w, rep));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_all_runs(const AllRunsOptions& o, std::istream& in, std::ostream& out) {
    const auto [alphabet, word] = intern(read_input(o.input, in, o.raw));
    if (o.dump_table) {
        out << (o.serial ? build_square_table_serial(word) : build_square_table(word)).dump();
        return exit_ok;
    }
    std::vector<OfflineRun> result;
    if (o.engine == "oracle")
        result = oracle_offline(word);
    else
        result = o.serial ? offline_all_runs_serial(word) : offline_all_runs(word);
    for (const auto& r : result) write_record(out, r.occurrence(), o.json, r.p);
    return exit_ok;
}

// --- compare ---------------------------------------------------------------

struct CompareOptions {
    std::string period;
    std::string input = "-";
    std::size_t random = 0;
    unsigned sigma = 2;
    std::size_t length = 64;
    std::uint64_t seed = 1;
    std::size_t max_norm = 0;
    bool inject_fault = false;
    bool raw = false;
};

template <class T>
void corrupt(std::vector<T>& records) {
    if (records.empty())
        records.push_back(T{});
    else
        ++records.front().e;
}

std::string describe(const RunOccurrence& r) {
    std::ostringstream os;
    os << r.b << '\t' << r.h << '\t' << r.t << '\t' << r.e;
    return os.str();
}

std::string describe(const OfflineRun& r) { return std::to_string(r.p) + '\t' + describe(r.occurrence()); }

/// Writes one line per record present on only one side; returns the line count.
template <class T>
std::size_t report_differences(std::vector<T> engine, std::vector<T> reference, const std::string& engine_name,
                               const std::string& context, std::ostream& out) {
    std::sort(engine.begin(), engine.end());
    std::sort(reference.begin(), reference.end());
    std::vector<T> only_engine, only_reference;
    std::set_difference(engine.begin(), engine.end(), reference.begin(), reference.end(),
                        std::back_inserter(only_engine));
    std::set_difference(reference.begin(), reference.end(), engine.begin(), engine.end(),
                        std::back_inserter(only_reference));
    for (const auto& r : only_engine) out << context << engine_name << '\t' << describe(r) << '\n';
    for (const auto& r : only_reference) out << context << "oracle\t" << describe(r) << '\n';
    return only_engine.size() + only_reference.size();
}

std::string compare_word(const std::string& text, const CompareOptions& o, const std::string& context,
                         std::size_t& mismatches) {
    std::ostringstream report;
    if (!o.period.empty() || o.max_norm > 0) {
        std::vector<ParikhVector> periods;
        Word word;
        if (!o.period.empty()) {
            Interned data = intern_with_period(text, PeriodSpec::parse(o.period));
            word = std::move(data.word);
            periods.push_back(std::move(data.period));
        } else {
            auto [alphabet, w] = intern(text);
            word = std::move(w);
            periods = distinct_window_vectors(word, alphabet.size(), o.max_norm);
        }
        for (const auto& period : periods) {
            auto online = runs(period, word);
            if (o.inject_fault) corrupt(online);
            const std::string ctx = context + period.to_string() + '\t';
            mismatches += report_differences(online, oracle::oracle_runs(period, word).runs, "online", ctx, report);
        }
    } else {
        const auto [alphabet, word] = intern(text);
        auto offline = offline_all_runs(word);
        if (o.inject_fault) corrupt(offline);
        mismatches += report_differences(offline, oracle_offline(word), "offline", context, report);
    }
    return report.str();
}

int cmd_compare(const CompareOptions& o, std::istream& in, std::ostream& out) {
    if (!o.period.empty()) PeriodSpec::parse(o.period);  // surface syntax errors before any work
    if (o.random == 0) {
        std::size_t mismatches = 0;
        out << compare_word(read_input(o.input, in, o.raw), o, "", mismatches);
        return mismatches == 0 ? exit_ok : exit_mismatch;
    }
    if (o.sigma < 1 || o.sigma > 26) throw CLI::ValidationError("--sigma", "must be in [1, 26]");

    const auto count = static_cast<std::int64_t>(o.random);
    std::vector<std::string> reports(o.random);
    std::vector<std::size_t> mismatches(o.random, 0);
    std::vector<std::string> failures(o.random);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        try {
            reports[k] = compare_word(generate_word(o.sigma, o.length, seed), o,
                                      "seed=" + std::to_string(seed) + '\t', mismatches[k]);
        } catch (const std::exception& e) {
            failures[k] = e.what();
        }
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k < o.random; ++k) {
        if (!failures[k].empty()) throw std::runtime_error(failures[k]);
        out << reports[k];
        total += mismatches[k];
    }
    out << "checked " << o.random << " words, " << total << " mismatches\n";
    return total == 0 ? exit_ok : exit_mismatch;
}

// --- gen / bench -----------------------------------------------------------

struct GenOptions {
    unsigned sigma = 2;
    std::size_t length = 0;
    std::uint64_t seed = 0;
};

struct BenchOptions {
    std::string period;
    std::string input = "-";
    std::size_t random_length = 0;
    unsigned sigma = 2;
    std::uint64_t seed = 1;
    bool raw = false;
};

int cmd_bench(const BenchOptions& o, std::istream& in, std::ostream& out) {
    const PeriodSpec spec = PeriodSpec::parse(o.period);
    const std::string text =
        o.random_length > 0 ? generate_word(o.sigma, o.random_length, o.seed) : read_input(o.input, in, o.raw);
    const Interned data = intern_with_period(text, spec);

    OnlineScanner scanner(data.period);
    std::size_t found = 0;
    const auto start = std::chrono::steady_clock::now();
    for (Symbol s : data.word) found += scanner.push(s).has_value();
    found += scanner.finish().has_value();
    const auto elapsed = std::chrono::steady_clock::now() - start;

    const ScanCounters c = scanner.counters();
    nlohmann::ordered_json record;
    record["n"] = data.word.size();
    record["period_norm"] = data.period.norm();
    record["sigma"] = data.alphabet.size();
    record["runs"] = found;
    record["wall_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
    record["comparisons"] = c.comparisons();
    record["window_operations"] = c.window_operations;
    record["head_steps"] = c.head_steps;
    record["flush_iterations"] = c.flush_iterations;
    record["state_bytes"] = scanner.footprint_bytes();
    out << record.dump() << '\n';
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abelian runs of a word: online single-period scan and offline all-period search", "abrun"};
    app.require_subcommand(1);

    FindOptions find;
    auto* find_cmd = app.add_subcommand("find", "Report every abelian run of one Parikh vector");
    find_cmd->add_option("--period,-p", find.period, "Parikh vector as sym:count[,sym:count...]")->required();
    find_cmd->add_option("input", find.input, "Input file, '-' for standard input");
    find_cmd->add_option("--engine", find.engine)->check(CLI::IsMember({"online", "oracle"}));
    find_cmd->add_flag("--stream", find.stream, "Flush each record as soon as it is found");
    find_cmd->add_flag("--trace", find.trace, "Log candidate replacements to standard error");
    find_cmd->add_flag("--json", find.json, "One JSON object per line");
    find_cmd->add_flag("--raw", find.raw, "Keep a trailing newline as a symbol");

    AllRunsOptions all;
    auto* all_cmd = app.add_subcommand("all-runs", "Report abelian runs of every period length");
    all_cmd->add_option("input", all.input, "Input file, '-' for standard input");
    all_cmd->add_option("--engine", all.engine)->check(CLI::IsMember({"offline", "oracle"}));
    all_cmd->add_flag("--dump-L", all.dump_table, "Print the abelian-square table instead of runs");
    all_cmd->add_flag("--serial", all.serial, "Use the single-threaded kernels");
    all_cmd->add_flag("--json", all.json, "One JSON object per line");
    all_cmd->add_flag("--raw", all.raw, "Keep a trailing newline as a symbol");

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Check an engine against the brute-force oracle");
    cmp_cmd->add_option("--period,-p", cmp.period, "Compare the online engine for this Parikh vector");
    cmp_cmd->add_option("input", cmp.input, "Input file, '-' for standard input");
    cmp_cmd->add_option("--random", cmp.random, "Compare on this many generated words instead of an input");
    cmp_cmd->add_option("--sigma", cmp.sigma, "Alphabet size of generated words");
    cmp_cmd->add_option("--length", cmp.length, "Length of generated words");
    cmp_cmd->add_option("--seed", cmp.seed, "Seed of the first generated word; later words use seed+1, ...");
    cmp_cmd->add_option("--max-norm", cmp.max_norm,
                        "Compare the online engine for every window vector up to this norm");
    cmp_cmd->add_flag("--inject-fault", cmp.inject_fault, "Corrupt the engine output (harness self-test)");
    cmp_cmd->add_flag("--raw", cmp.raw, "Keep a trailing newline as a symbol");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Print a deterministic pseudo-random word");
    gen_cmd->add_option("--sigma", gen.sigma, "Alphabet size (1..26)")->required()->check(CLI::Range(1, 26));
    gen_cmd->add_option("--length", gen.length, "Word length")->required();
    gen_cmd->add_option("--seed", gen.seed, "Initial generator state");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the online engine and report its work counters");
    bench_cmd->add_option("--period,-p", bench.period, "Parikh vector as sym:count[,sym:count...]")->required();
    bench_cmd->add_option("input", bench.input, "Input file, '-' for standard input");
    bench_cmd->add_option("--random-length", bench.random_length, "Benchmark on a generated word of this length");
    bench_cmd->add_option("--sigma", bench.sigma, "Alphabet size of the generated word")->check(CLI::Range(1, 26));
    bench_cmd->add_option("--seed", bench.seed, "Seed of the generated word");
    bench_cmd->add_flag("--raw", bench.raw, "Keep a trailing newline as a symbol");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*find_cmd) return cmd_find(find, in, out, err);
        if (*all_cmd) return cmd_all_runs(all, in, out);
        if (*cmp_cmd) return cmd_compare(cmp, in, out);
        if (*gen_cmd) {
            out << generate_word(gen.sigma, gen.length, gen.seed);
            return exit_ok;
        }
        if (*bench_cmd) return cmd_bench(bench, in, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace abelian::cli
