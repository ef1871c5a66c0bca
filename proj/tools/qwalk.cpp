// Command-line front end: spectral tables, probability curves, verification
// suites, oracle searches, measured-walk traces, layer structure. CSV or JSON
// out, deterministic per seed; exit 0 on success, 1 on failed checks, 2 on
// usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qwalk/combinatorics.hpp"
#include "qwalk/dense_sim.hpp"
#include "qwalk/layers.hpp"
#include "qwalk/measured.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/verify.hpp"

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Rows are assembled fully in memory and written in one shot, so a failed
// computation never leaves a partial file behind.
void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
}

std::string hex_of(qwalk::Name x, int bits) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%0*" PRIx64, (bits + 3) / 4, x);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i)
            out += (i ? "," : "") + header[i];
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + row[i];
            out += '\n';
        }
        return out;
    }

    std::string as_json() const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        return json{{"rows", arr}}.dump(2) + "\n";
    }

    std::string render(const std::string& format) const {
        return format == "json" ? as_json() : csv();
    }
};

int cmd_spectrum(int n, int s, const std::string& format, const std::string& out) {
    qwalk::WalkSpec spec(n, s);
    const auto table = qwalk::spectral_table(spec);
    Table t;
    t.header = {"k", "d", "m_minus_2d", "cos_omega", "omega", "parity"};
    for (int k = 0; k <= n; ++k) {
        const auto& row = table.rows[k];
        mpz_class phi = spec.m - 2 * row.d;
        t.rows.push_back({std::to_string(k), row.d.get_str(), phi.get_str(),
                          fmt_double(row.cos_omega), fmt_double(row.omega),
                          std::to_string(row.parity)});
    }
    write_output(t.render(format), out);
    return 0;
}

int cmd_curve(int n, int s, long long t_max, const std::string& format,
              const std::string& out) {
    qwalk::WalkSpec spec(n, s);
    std::vector<long long> ts(t_max + 1);
    for (long long t = 0; t <= t_max; ++t) ts[t] = t;
    const auto curve = qwalk::probability_curve(spec, ts);
    Table t;
    t.header = {"t", "return_prob", "hit_prob"};
    for (const auto& pt : curve)
        t.rows.push_back({std::to_string(pt.t), fmt_double(pt.return_prob),
                          fmt_double(pt.hit_prob)});
    write_output(t.render(format), out);
    return 0;
}

int cmd_verify(const std::string& suite, int n_cap, long long trials,
               std::uint64_t seed, const std::string& format, const std::string& out) {
    qwalk::CheckOptions opt;
    opt.n_cap = n_cap;
    opt.trials = trials;
    opt.seed = seed;

    std::vector<qwalk::CheckReport> reports;
    bool found = false;
    for (const auto& [name, fn] : qwalk::check_registry()) {
        if (suite == "all" || suite == name) {
            found = true;
            reports.push_back(fn(opt));
        }
    }
    if (!found) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }

    bool all_pass = true;
    Table t;
    t.header = {"suite", "case", "detail"};
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        std::printf("[%s] %s: %lld cases", rep.pass ? "PASS" : "FAIL",
                    rep.suite.c_str(), rep.cases);
        for (const auto& [k, v] : rep.metrics)
            std::printf("  %s=%.6g", k.c_str(), v);
        std::printf("\n");
        for (std::size_t i = 0; i < rep.failures.size(); ++i)
            t.rows.push_back({rep.suite, std::to_string(i), rep.failures[i]});
    }
    if (!out.empty() || !t.rows.empty()) write_output(t.render(format), out);
    return all_pass ? 0 : 1;
}

int cmd_oracle(int n, int s, const std::string& mode, std::uint64_t seed,
               long long trials, long long T, const std::string& transcript_path,
               const std::string& replay_path, const std::string& format,
               const std::string& out) {
    if (!replay_path.empty()) {
        qwalk::OracleGraph oracle(n, s, seed);
        std::ifstream in(replay_path);
        if (!in) throw std::runtime_error("cannot open transcript: " + replay_path);
        const auto res = qwalk::replay_transcript(oracle, in);
        std::printf("replay: %s (%zu lines)\n", res.ok ? "ok" : "mismatch",
                    res.lines_checked);
        if (!res.ok) std::printf("  %s\n", res.first_mismatch.c_str());
        return res.ok ? 0 : 1;
    }

    if (mode == "classical") {
        Table t;
        t.header = {"trial", "success", "queries", "answer"};
        long long successes = 0;
        double mean_queries = 0.0;
        for (long long i = 0; i < trials; ++i) {
            qwalk::OracleGraph oracle(n, s, seed + 1000 * i);
            const bool record = !transcript_path.empty() && i == 0;
            if (record) oracle.set_recording(true);
            const auto res =
                qwalk::classical_search(oracle, oracle.start_name(), seed + 7 * i + 1);
            if (record)
                write_output(qwalk::format_transcript(oracle), transcript_path);
            successes += res.success ? 1 : 0;
            mean_queries += static_cast<double>(res.queries) / trials;
            t.rows.push_back({std::to_string(i), std::to_string(res.success ? 1 : 0),
                              std::to_string(res.queries),
                              res.answer ? hex_of(*res.answer, 2 * n) : "-"});
        }
        std::printf("classical search n=%d s=%d trials=%lld: success_rate=%.6g mean_queries=%.6g\n",
                    n, s, trials, static_cast<double>(successes) / trials, mean_queries);
        if (!out.empty()) write_output(t.render(format), out);
        return 0;
    }
    if (mode == "quantum") {
        qwalk::OracleGraph oracle(n, s, seed);
        const auto res = qwalk::quantum_search(oracle, oracle.start_name(), T);
        std::printf("quantum search n=%d s=%d T=%lld: success_prob=%.12g\n", n, s, T,
                    res.success_probability);
        Table t;
        t.header = {"name", "probability"};
        for (const auto& [name, prob] : res.distribution)
            t.rows.push_back({hex_of(name, 2 * n), fmt_double(prob)});
        if (!out.empty()) write_output(t.render(format), out);
        return 0;
    }
    std::cerr << "unknown oracle mode: " << mode << "\n";
    return 2;
}

int cmd_measured(int n, int s, int T0, int t_max, const std::string& pipeline,
                 const std::string& format, const std::string& out) {
    qwalk::WalkSpec spec(n, s);
    const qwalk::MeasuredTrace trace = pipeline == "dense"
                                           ? qwalk::projective_simulation(spec, T0, t_max)
                                           : qwalk::measured_trace_spectral(spec, T0, t_max);
    Table t;
    t.header = {"t", "alpha", "beta", "q", "p"};
    for (int tt = 0; tt <= t_max; ++tt) {
        const double beta = tt >= T0 ? trace.beta[tt - T0] : 0.0;
        t.rows.push_back({std::to_string(tt), fmt_double(trace.alpha[tt]),
                          fmt_double(beta), fmt_double(trace.q[tt]),
                          fmt_double(trace.p[tt])});
    }
    write_output(t.render(format), out);
    return 0;
}

int cmd_layers(int n, int s, const std::string& format, const std::string& out) {
    Table t;
    t.header = {"l", "t", "connection_count", "layer_size"};
    for (int l = 0; l <= n; ++l) {
        const mpz_class size = qwalk::binom(n, l);
        for (int tt : qwalk::layer_neighbors(l, n, s))
            t.rows.push_back({std::to_string(l), std::to_string(tt),
                              qwalk::connection_count(l, tt, n, s).get_str(),
                              size.get_str()});
    }
    write_output(t.render(format), out);
    return 0;
}

}  // namespace

// Everything a run needs, as parsed from the command line.
struct RunConfig {
    int n = 0, s = 0, T0 = 0;
    long long t_max = 0, trials = 1, verify_trials = 0, T = 0, n_cap = 0;
    std::uint64_t seed = 0;
    std::string format = "csv", out, suite = "all", mode = "classical";
    std::string transcript_path, replay_path, pipeline = "spectral";
};

int main(int argc, char** argv) {
    CLI::App app{"coined quantum walks on Cay(Z_2^n, {|e|=s}): spectra, curves, "
                 "verification, oracle search"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* spectrum = app.add_subcommand("spectrum", "per-weight-class spectral table");
    spectrum->add_option("--n", cfg.n, "dimension")->required();
    spectrum->add_option("--s", cfg.s, "generator weight")->required();
    spectrum->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_option("--out", cfg.out, "output path (default stdout)");

    auto* curve = app.add_subcommand("curve", "return/hit probability curve");
    curve->add_option("--n", cfg.n)->required();
    curve->add_option("--s", cfg.s)->required();
    curve->add_option("--t-max", cfg.t_max, "last step")->required();
    curve->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--out", cfg.out);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", cfg.suite, "suite name or 'all'");
    verify->add_option("--n", cfg.n_cap, "size cap override")
        ->check(CLI::Range(2LL, 1000000LL));
    verify->add_option("--trials", cfg.verify_trials, "trial/step count override");
    verify->add_option("--out", cfg.out, "failure-record output path");
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--seed", cfg.seed);

    auto* oracle = app.add_subcommand("oracle", "antipodal-vertex search");
    oracle->add_option("--n", cfg.n)->required();
    oracle->add_option("--s", cfg.s)->required();
    oracle->add_option("--mode", cfg.mode)
        ->check(CLI::IsMember({"classical", "quantum"}));
    oracle->add_option("--seed", cfg.seed, "base seed")->required();
    oracle->add_option("--trials", cfg.trials);
    oracle->add_option("--t", cfg.T, "steps (quantum mode)");
    oracle->add_option("--transcript", cfg.transcript_path, "record first trial");
    oracle->add_option("--replay", cfg.replay_path, "verify a recorded transcript");
    oracle->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    oracle->add_option("--out", cfg.out);

    auto* measured = app.add_subcommand("measured", "origin-measured walk trace");
    measured->add_option("--n", cfg.n)->required();
    measured->add_option("--s", cfg.s)->required();
    measured->add_option("--t0", cfg.T0, "measurement start (even)");
    measured->add_option("--t-max", cfg.t_max)->required();
    measured->add_option("--pipeline", cfg.pipeline)
        ->check(CLI::IsMember({"spectral", "dense"}));
    measured->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    measured->add_option("--out", cfg.out);

    auto* layers = app.add_subcommand("layers", "inter-layer adjacency table");
    layers->add_option("--n", cfg.n)->required();
    layers->add_option("--s", cfg.s)->required();
    layers->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    layers->add_option("--out", cfg.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg.n, cfg.s, cfg.format, cfg.out);
        if (curve->parsed())
            return cmd_curve(cfg.n, cfg.s, cfg.t_max, cfg.format, cfg.out);
        if (verify->parsed())
            return cmd_verify(cfg.suite, (int)cfg.n_cap, cfg.verify_trials, cfg.seed,
                              cfg.format, cfg.out);
        if (oracle->parsed())
            return cmd_oracle(cfg.n, cfg.s, cfg.mode, cfg.seed, cfg.trials, cfg.T,
                              cfg.transcript_path, cfg.replay_path, cfg.format,
                              cfg.out);
        if (measured->parsed())
            return cmd_measured(cfg.n, cfg.s, cfg.T0, (int)cfg.t_max, cfg.pipeline,
                                cfg.format, cfg.out);
        if (layers->parsed()) return cmd_layers(cfg.n, cfg.s, cfg.format, cfg.out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
