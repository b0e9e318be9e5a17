#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlp/approx.hpp"
#include "mlp/exact.hpp"
#include "mlp/generate.hpp"
#include "mlp/io.hpp"
#include "mlp/ktree.hpp"
#include "mlp/pctsp.hpp"
#include "mlp/report.hpp"
#include "mlp/tour.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundViolation = 2;
constexpr int kExitPrecondition = 3;

class Timer {
  public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

mlp::ParsedInstance generate_kind(const std::string& kind, int n, std::uint64_t seed) {
    mlp::ParsedInstance p;
    if (kind == "metric") {
        p.kind = mlp::InstanceKind::Matrix;
        p.metric = mlp::gen_metric(n, seed);
    } else if (kind == "tree" || kind == "unit-tree") {
        p.kind = mlp::InstanceKind::Tree;
        p.tree = mlp::gen_tree(n, seed, kind == "unit-tree");
    } else if (kind == "line") {
        p.kind = mlp::InstanceKind::Line;
        p.line = mlp::gen_line(n, seed);
    } else if (kind == "diam3") {
        if (n < 2) throw std::invalid_argument("diam3 instances need n >= 2");
        const int kl = (n - 2) / 2;
        p.kind = mlp::InstanceKind::Tree;
        p.tree = mlp::gen_diameter3(kl, n - 2 - kl, seed);
    } else {
        throw std::invalid_argument("unknown kind '" + kind + "'");
    }
    return p;
}

struct SolveOutcome {
    mlp::RunRecord record;
    std::string route;
    bool maximization = false;
};

std::string route_string(const std::vector<int>& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i];
    return os.str();
}

/// Runs one algorithm on one instance; fills the record's oracle/ratio/bound
/// when verify is set and the metric view is small enough for brute force.
SolveOutcome run_algorithm(const mlp::ParsedInstance& inst, const std::string& algo, double a,
                           double b, bool verify) {
    using namespace mlp;
    SolveOutcome out;
    out.record.algorithm = algo;
    const MetricInstance metric = inst.to_metric();
    const bool oracle_ok = metric.n <= kBruteForceMaxN;
    if (verify && !oracle_ok)
        std::cerr << "note: oracle verification disabled for n > " << kBruteForceMaxN
                  << "; bounds reported as unverified\n";
    const bool do_verify = verify && oracle_ok;

    auto need_tree = [&]() -> const TreeInstance& {
        if (inst.kind != InstanceKind::Tree)
            throw std::invalid_argument(algo + " requires a tree instance");
        return *inst.tree;
    };
    auto need_line = [&]() -> const LineInstance& {
        if (inst.kind != InstanceKind::Line)
            throw std::invalid_argument(algo + " requires a line instance");
        return *inst.line;
    };

    if (algo == "bf") {
        const ExactResult r = brute_force_mlt(metric);
        out.record.value = r.value;
        out.route = route_string(r.tour().order);
        if (do_verify) {
            out.record.oracle_value = r.value;
            out.record.ratio = 1.0;
            out.record.bound = 1.0;
        }
    } else if (algo == "line-dp") {
        const ExactResult r = dp_line(need_line());
        out.record.value = r.value;
        out.route = route_string(r.tour().order);
        if (do_verify) {
            out.record.oracle_value = brute_force_mlt(metric).value;
            out.record.ratio = r.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = 1.0;
        }
    } else if (algo == "diam3-dp") {
        const ExactResult r = dp_diameter3(need_tree());
        out.record.value = r.value;
        out.route = route_string(r.tour().order);
        if (do_verify) {
            out.record.oracle_value = brute_force_mlt(metric).value;
            out.record.ratio = r.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = 1.0;
        }
    } else if (algo == "dfs") {
        const ExactResult r = dfs_unweighted_tree(need_tree());
        out.record.value = r.value;
        out.route = route_string(r.walk().steps);
        if (do_verify) {
            out.record.oracle_value = brute_force_mlt(metric).value;
            out.record.ratio = r.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = 1.0;
        }
    } else if (algo == "itree-8approx") {
        const ItreeApproxResult r = mlt_from_itrees(need_tree());
        out.record.value = r.value;
        out.route = route_string(r.walk.steps);
        if (do_verify) {
            out.record.oracle_value = brute_force_mlt(metric).value;
            out.record.ratio = r.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = 8.0;
        }
    } else if (algo == "pctsp-bf" || algo == "pctsp-gw") {
        PctspInstance pc(metric, inst.metric_penalties());
        const PctspSolution sol = algo == "pctsp-bf" ? brute_force_pctsp(pc) : gw_pctsp(pc);
        out.record.value = sol.cost;
        out.route = route_string(sol.cycle);
        if (do_verify && metric.n <= 9) {
            out.record.oracle_value = brute_force_pctsp(pc).cost;
            out.record.ratio = sol.cost / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound =
                algo == "pctsp-bf" ? 1.0 : (metric.n >= 2 ? 2.0 - 1.0 / (metric.n - 1) : 1.0);
        }
    } else if (algo == "mlt-144" || algo == "mlt-72") {
        const ApproxTour r =
            algo == "mlt-144" ? mlt_approx_doubling(metric) : mlt_approx_epsilon(metric);
        out.record.value = total_latency(metric, r.tour);
        out.route = route_string(r.tour.steps);
        if (do_verify) {
            out.record.oracle_value = brute_force_mlt(metric).value;
            out.record.ratio = out.record.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = algo == "mlt-144" ? 144.0 : 72.0;
        }
    } else if (algo == "tdtsp" || algo == "tdtsp-rev") {
        TdtspCoefficients c{a, b,
                            algo == "tdtsp" ? TdtspOrientation::PositiveLinear
                                            : TdtspOrientation::ReversedLinear};
        const TdtspApproxResult r = tdtsp_positive_linear(metric, c);
        out.record.value = r.cost;
        out.route = route_string(r.tour.order);
        if (do_verify) {
            if (algo == "tdtsp") {
                out.record.oracle_value = brute_force_tdtsp(metric, c).value;
                out.record.bound = 144.0;
            } else {
                // The reversed tour's start is relaxed, so compare against the
                // best reversed-linear tour over every start (empirical).
                double best = std::numeric_limits<double>::infinity();
                for (int s = 0; s < metric.n; ++s) {
                    MetricInstance m2 = metric;
                    m2.start = s;
                    best = std::min(best, brute_force_tdtsp(m2, c).value);
                }
                out.record.oracle_value = best;
                out.record.bound = 144.0;
                out.record.bound_empirical = true;
            }
            out.record.ratio = r.cost / std::max(*out.record.oracle_value, 1e-300);
        }
    } else if (algo == "greedy-neg") {
        const GreedyNegResult r = greedy_negative_linear(metric);
        out.record.value = r.max_latency;
        out.route = route_string(r.tour.order);
        out.maximization = true;
        if (do_verify) {
            out.record.oracle_value =
                brute_force_tdtsp(metric, {1.0, 0.0, TdtspOrientation::NegativeLinear}).value;
            out.record.ratio = *out.record.oracle_value / std::max(r.max_latency, 1e-300);
            out.record.bound = 2.0;
            out.record.bound_empirical = true;
        }
    } else if (algo == "line-9") {
        const LineDoublingResult r = line_doubling(need_line());
        out.record.value = r.value;
        out.route = route_string(r.walk.steps);
        if (do_verify) {
            out.record.oracle_value = dp_line(need_line()).value;
            out.record.ratio = r.value / std::max(*out.record.oracle_value, 1e-300);
            out.record.bound = 9.0;
            out.record.bound_empirical = true;
        }
    } else {
        throw CLI::ValidationError("--algo", "unknown algorithm '" + algo + "'");
    }
    return out;
}

int cmd_solve(const std::string& in_path, const std::string& algo, double a, double b,
              bool verify, const std::string& out_path) {
    mlp::ParsedInstance inst;
    try {
        inst = mlp::parse_instance(in_path);
    } catch (const mlp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    Timer timer;
    SolveOutcome outcome;
    try {
        outcome = run_algorithm(inst, algo, a, b, verify);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    outcome.record.elapsed_ms = timer.ms();
    outcome.record.instance_id = in_path;

    std::cout << "algorithm: " << algo << '\n';
    std::cout << "route: " << outcome.route << '\n';
    std::cout << "value: " << mlp::format_number(outcome.record.value) << '\n';
    if (outcome.record.oracle_value) {
        std::cout << "oracle: " << mlp::format_number(*outcome.record.oracle_value) << '\n';
        std::cout << "ratio: " << mlp::format_number(*outcome.record.ratio) << "  bound: "
                  << (outcome.record.bound_empirical ? "empirical:" : "")
                  << mlp::format_number(*outcome.record.bound) << '\n';
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        f << mlp::kCsvHeader << '\n' << mlp::to_csv_row(outcome.record) << '\n';
    }
    const std::vector<mlp::RunRecord> recs{outcome.record};
    if (mlp::any_proven_bound_violation(recs)) {
        std::cerr << "BOUND VIOLATION: ratio " << mlp::format_number(*outcome.record.ratio)
                  << " exceeds proven bound " << mlp::format_number(*outcome.record.bound) << '\n';
        return kExitBoundViolation;
    }
    if (outcome.record.bound_empirical && outcome.record.ratio &&
        *outcome.record.ratio > *outcome.record.bound + 1e-9)
        std::cout << "WARN: empirical bound exceeded (finding, not a failure)\n";
    return kExitOk;
}

int cmd_bench(const std::string& kind, int n, int seeds, const std::vector<std::string>& algos,
              double a, double b, const std::string& out_path) {
    std::vector<mlp::RunRecord> records;
    bool warned = false;
    for (int seed = 0; seed < seeds; ++seed) {
        mlp::ParsedInstance inst;
        try {
            inst = generate_kind(kind, n, static_cast<std::uint64_t>(seed));
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        // Penalized runs draw their penalties from a derived stream.
        const bool wants_pctsp =
            std::any_of(algos.begin(), algos.end(),
                        [](const std::string& s) { return s.rfind("pctsp", 0) == 0; });
        if (wants_pctsp && inst.kind == mlp::InstanceKind::Matrix) {
            mlp::Rng prng(static_cast<std::uint64_t>(seed) ^ 0x70656e616c7479ULL);
            inst.penalties.resize(inst.metric->n);
            for (double& p : inst.penalties) p = prng.uniform(0.0, 1.5);
        }
        for (const std::string& algo : algos) {
            Timer timer;
            SolveOutcome outcome;
            try {
                outcome = run_algorithm(inst, algo, a, b, /*verify=*/true);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: seed " << seed << ", algo " << algo << ": " << e.what()
                          << '\n';
                return kExitPrecondition;
            }
            outcome.record.elapsed_ms = timer.ms();
            outcome.record.instance_id = kind + "-" + std::to_string(n) + "-" +
                                         std::to_string(seed);
            outcome.record.seed = seed;
            if (outcome.record.bound_empirical && outcome.record.ratio &&
                *outcome.record.ratio > *outcome.record.bound + 1e-9) {
                std::cout << "WARN: " << algo << " seed " << seed << " empirical ratio "
                          << mlp::format_number(*outcome.record.ratio) << " > "
                          << mlp::format_number(*outcome.record.bound) << '\n';
                warned = true;
            }
            records.push_back(std::move(outcome.record));
        }
    }
    const std::string csv = mlp::render_csv(records);
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kExitUsage;
    }
    f << csv;
    std::cout << "wrote " << records.size() << " records to " << out_path
              << (warned ? " (with WARN findings)" : "") << '\n';
    return mlp::any_proven_bound_violation(records) ? kExitBoundViolation : kExitOk;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& out_path) {
    try {
        const mlp::ParsedInstance p = generate_kind(kind, n, seed);
        mlp::write_instance_file(out_path, p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::cout << "wrote " << out_path << '\n';
    return kExitOk;
}

int cmd_analyze(const std::string& in_path, const std::string& out_path) {
    mlp::ParsedInstance inst;
    try {
        inst = mlp::parse_instance(in_path);
    } catch (const mlp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (inst.kind != mlp::InstanceKind::Tree) {
        std::cerr << "error: --itree-table requires a tree instance\n";
        return kExitPrecondition;
    }
    const mlp::KTreeTable table = mlp::itree_dp(*inst.tree);
    std::ostringstream os;
    os << "i,cost\n";
    for (int i = 1; i <= table.n(); ++i)
        os << i << ',' << mlp::format_number(table.cost(i)) << '\n';
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        f << os.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-latency tours: exact solvers, i-tree and primal-dual approximations"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a random instance file");
    std::string gen_kind = "metric", gen_out;
    int gen_n = 8;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "metric|tree|unit-tree|line|diam3");
    gen->add_option("--n", gen_n, "instance size")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "run one solver on an instance file");
    std::string solve_in, solve_algo, solve_out;
    double solve_a = 1.0, solve_b = 0.0;
    bool solve_verify = false;
    solve->add_option("--in", solve_in, "instance file")->required();
    solve->add_option("--algo", solve_algo,
                      "bf|line-dp|diam3-dp|dfs|itree-8approx|pctsp-bf|pctsp-gw|mlt-144|mlt-72|"
                      "tdtsp|tdtsp-rev|greedy-neg|line-9")
        ->required();
    solve->add_option("--a", solve_a, "TDTSP coefficient a");
    solve->add_option("--b", solve_b, "TDTSP coefficient b");
    solve->add_flag("--verify", solve_verify, "check against the brute-force oracle (n <= 11)");
    solve->add_option("--out", solve_out, "write the run record as CSV");

    // bench
    auto* bench = app.add_subcommand("bench", "seeded batch runs with oracle ratios");
    std::string bench_kind = "metric", bench_algos, bench_out;
    int bench_n = 8, bench_seeds = 10;
    double bench_a = 1.0, bench_b = 0.0;
    bench->add_option("--kind", bench_kind, "instance kind, as in gen");
    bench->add_option("--n", bench_n, "instance size")->required();
    bench->add_option("--seeds", bench_seeds, "number of seeds (0.. seeds-1)")->required();
    bench->add_option("--algos", bench_algos, "comma-separated algorithm list")->required();
    bench->add_option("--a", bench_a, "TDTSP coefficient a");
    bench->add_option("--b", bench_b, "TDTSP coefficient b");
    bench->add_option("--out", bench_out, "output CSV path")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "dump derived tables");
    std::string an_in, an_out;
    bool an_itree = false;
    analyze->add_flag("--itree-table", an_itree, "emit the i-tree cost table as CSV");
    analyze->add_option("--in", an_in, "instance file")->required();
    analyze->add_option("--out", an_out, "output CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_seed, gen_out);
        if (solve->parsed())
            return cmd_solve(solve_in, solve_algo, solve_a, solve_b, solve_verify, solve_out);
        if (bench->parsed()) {
            std::vector<std::string> algos;
            std::stringstream ss(bench_algos);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) algos.push_back(item);
            if (algos.empty()) {
                std::cerr << "error: --algos must name at least one algorithm\n";
                return kExitUsage;
            }
            return cmd_bench(bench_kind, bench_n, bench_seeds, algos, bench_a, bench_b, bench_out);
        }
        if (analyze->parsed()) {
            if (!an_itree) {
                std::cerr << "error: analyze requires --itree-table\n";
                return kExitUsage;
            }
            return cmd_analyze(an_in, an_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
