#include "mffa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mffa/config.hpp"

namespace mffa {

void ExperimentSpec::validate() const {
    if (variants.empty()) throw std::invalid_argument("experiment needs at least one variant");
    if (p_values.empty()) throw std::invalid_argument("experiment needs at least one p value");
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p value " + format_double(p) + " outside [0,1]");
    }
    if (q_seeds.empty()) throw std::invalid_argument("experiment needs at least one q seed");
    if (runs_per_graph < 1) throw std::invalid_argument("runs_per_graph must be at least 1");
    if (n < 3) throw std::invalid_argument("experiment needs n >= 3");
    params.validate();
}

namespace {

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(text)) {
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const auto lo = parse_uint(std::string_view(item).substr(0, dots));
            const auto hi = parse_uint(std::string_view(item).substr(dots + 2));
            if (hi < lo) throw ConfigError("empty seed range '" + item + "'");
            for (auto q = lo; q <= hi; ++q) out.push_back(q);
        } else {
            out.push_back(parse_uint(item));
        }
    }
    return out;
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in) {
    ExperimentSpec spec;
    for (const auto& kv : parse_key_values(in)) {
        try {
            if (kv.key == "variants") {
                spec.variants.clear();
                for (const auto& name : split_list(kv.value)) {
                    auto v = parse_variant(name);
                    if (!v) throw ConfigError("unknown variant '" + name + "'");
                    spec.variants.push_back(*v);
                }
            } else if (kv.key == "n") {
                spec.n = parse_uint(kv.value);
            } else if (kv.key == "p_values") {
                spec.p_values.clear();
                for (const auto& item : split_list(kv.value)) spec.p_values.push_back(parse_double(item));
            } else if (kv.key == "q_seeds") {
                spec.q_seeds = parse_seed_list(kv.value);
            } else if (kv.key == "runs_per_graph") {
                spec.runs_per_graph = parse_uint(kv.value);
            } else if (kv.key == "out" || kv.key == "output") {
                spec.output = kv.value;
            } else if (!apply_param(spec.params, kv.key, kv.value)) {
                throw ConfigError("unknown key '" + kv.key + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(kv.line) + ": " + e.what());
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return parse_experiment_spec(in);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

double success_rate(std::span<const RunResult> runs) {
    if (runs.empty()) throw std::invalid_argument("success rate of zero runs");
    const auto hits = std::count_if(runs.begin(), runs.end(), [](const RunResult& r) { return r.success; });
    return static_cast<double>(hits) / static_cast<double>(runs.size());
}

std::optional<double> aes(std::span<const RunResult> runs) {
    if (runs.empty()) throw std::invalid_argument("AES of zero runs");
    std::uint64_t total = 0;
    std::size_t hits = 0;
    for (const auto& r : runs) {
        if (!r.success) continue;
        total += r.evaluations;
        ++hits;
    }
    if (hits == 0) return std::nullopt;
    return static_cast<double>(total) / static_cast<double>(hits);
}

std::uint64_t derive_run_seed(std::uint64_t base, Variant variant, double p, std::uint64_t q,
                              std::size_t repetition) {
    std::uint64_t s = combine_seed(base, static_cast<std::uint64_t>(variant));
    s = combine_seed(s, std::bit_cast<std::uint64_t>(p));
    s = combine_seed(s, q);
    return combine_seed(s, repetition);
}

ResultTable run_experiment(const ExperimentSpec& spec, const ExperimentOptions& options) {
    spec.validate();

    struct GraphTask {
        Variant variant;
        double p;
        std::uint64_t q;
    };
    std::vector<GraphTask> tasks;
    for (auto v : spec.variants)
        for (double p : spec.p_values)
            for (auto q : spec.q_seeds) tasks.push_back({v, p, q});

    const simd::Kernels& kernels = options.kernels ? *options.kernels : simd::active_kernels();
    std::vector<RunRecord> records(tasks.size() * spec.runs_per_graph);
    std::atomic<std::size_t> next{0};
    std::mutex callback_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                const auto& task = tasks[t];
                const Graph g = generate({task.variant, spec.n, task.p, task.q});
                for (std::size_t rep = 0; rep < spec.runs_per_graph; ++rep) {
                    RunRecord rec{task.variant, task.p, task.q, rep,
                                  derive_run_seed(spec.params.seed, task.variant, task.p, task.q, rep), {}};
                    FfaParams params = spec.params;
                    params.seed = rec.seed;
                    rec.result = run(g, params, kernels);
                    if (rec.result.success && !is_proper(g, rec.result.best_coloring)) {
                        throw std::logic_error("run reported success with an improper coloring");
                    }
                    if (options.on_run) {
                        std::lock_guard lock(callback_mutex);
                        options.on_run(rec);
                    }
                    if (!options.keep_details) {
                        rec.result.best_trace = {};
                        rec.result.best_coloring = {};
                    }
                    records[t * spec.runs_per_graph + rep] = std::move(rec);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
                return;
            }
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    ResultTable table;
    table.rows = aggregate(records);
    table.runs = std::move(records);
    return table;
}

std::vector<ResultRow> aggregate(std::span<const RunRecord> runs) {
    struct Acc {
        std::size_t runs = 0;
        std::size_t successes = 0;
        std::uint64_t evaluations = 0;
    };
    // Integer accumulation makes the result independent of run order.
    std::map<std::pair<std::string_view, double>, std::pair<Variant, Acc>> groups;
    for (const auto& rec : runs) {
        auto& [variant, acc] = groups[{to_string(rec.variant), rec.p}];
        variant = rec.variant;
        ++acc.runs;
        if (rec.result.success) {
            ++acc.successes;
            acc.evaluations += rec.result.evaluations;
        }
    }
    std::vector<ResultRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, entry] : groups) {
        const auto& [variant, acc] = entry;
        ResultRow row{variant, key.second, acc.runs, acc.successes,
                      static_cast<double>(acc.successes) / static_cast<double>(acc.runs), std::nullopt};
        if (acc.successes > 0) {
            row.aes = static_cast<double>(acc.evaluations) / static_cast<double>(acc.successes);
        }
        rows.push_back(row);
    }
    return rows;
}

void emit_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << "variant,p,runs,successes,sr,aes\n";
    for (const auto& r : rows) {
        out << to_string(r.variant) << ',' << format_double(r.p) << ',' << r.runs << ',' << r.successes
            << ',' << format_double(r.sr) << ',';
        if (r.aes) out << format_double(*r.aes);
        out << '\n';
    }
}

void write_csv(const std::string& path, std::span<const ResultRow> rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    emit_csv(out, rows);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<ResultRow> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "variant,p,runs,successes,sr,aes") {
        throw ConfigError("missing or unexpected CSV header");
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 6) throw ConfigError("CSV row needs 6 fields: " + line);
        auto variant = parse_variant(fields[0]);
        if (!variant) throw ConfigError("unknown variant in CSV: " + fields[0]);
        ResultRow row{*variant, parse_double(fields[1]), parse_uint(fields[2]), parse_uint(fields[3]),
                      parse_double(fields[4]), std::nullopt};
        if (!fields[5].empty()) row.aes = parse_double(fields[5]);
        rows.push_back(row);
    }
    return rows;
}

void emit_runs_csv(std::ostream& out, std::span<const RunRecord> runs) {
    out << "variant,p,q,repetition,seed,success,evaluations,best_penalty,generations\n";
    for (const auto& r : runs) {
        out << to_string(r.variant) << ',' << format_double(r.p) << ',' << r.q << ',' << r.repetition << ','
            << r.seed << ',' << (r.result.success ? 1 : 0) << ',' << r.result.evaluations << ','
            << r.result.best_penalty << ',' << r.result.generations << '\n';
    }
}

}  // namespace mffa
