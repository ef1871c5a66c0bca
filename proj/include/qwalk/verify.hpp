#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

// Named verification sweeps shared by the CLI `verify` subcommand and the
// acceptance suite. Each check runs a self-contained sweep and reports
// pass/fail with counterexamples and summary metrics.

namespace qwalk {

struct CheckReport {
    std::string suite;
    bool pass = true;
    long long cases = 0;
    std::vector<std::string> failures;  // capped; first ones kept
    std::vector<std::pair<std::string, double>> metrics;

    CheckReport() = default;
    explicit CheckReport(std::string name) : suite(std::move(name)) {}

    void fail(const std::string& msg);
    void metric(const std::string& name, double value) { metrics.emplace_back(name, value); }
};

struct CheckOptions {
    int n_cap = 0;            // 0 = suite default
    long long trials = 0;     // 0 = suite default
    std::uint64_t seed = 1;
};

// Exact identities: m - 2 d_k = phi_{k,n}(s), generating-function expansion
// termwise, reflection |phi(k)| = |phi(n-k)|, midpoint special values.
CheckReport check_kravchuk_identity(const CheckOptions& opt = {});

// d_parity against exact d_k mod 2; the mod-4 difference recurrence.
CheckReport check_parity_laws(const CheckOptions& opt = {});

// |asin(x) - x| <= |x|^3 for the eigenphase offsets with |x| <= 1/2.
CheckReport check_arcsin_linearization(const CheckOptions& opt = {});

// |cos omega_k| <= 2 (1-s/n)^(-s) (s+1)! delta^s across the delta window,
// n in {50,100,200,400}, s in {1,2,3}, f = ln n.
CheckReport check_kravchuk_bound(const CheckOptions& opt = {});

// Spectral amplitudes against dense-simulator projections, n <= 9, s <= 4,
// t <= 100, tolerance 1e-9.
CheckReport check_spectral_vs_dense(const CheckOptions& opt = {});

// Hypercube n = 100: hit probability > 0.9 at the parity-adjusted (pi/2)m,
// return probability > 0.9 at the parity-adjusted pi*m, plus frozen
// regression baselines.
CheckReport check_hypercube_hitting(const CheckOptions& opt = {});

// For every (n <= 300, s in {2,3}) with C(n-1,s-1) even and s! <= n^(s/8):
// return probability > 0.9 and hit probability < 0.1 at parity-adjusted
// (pi/2)m.
CheckReport check_dichotomy(const CheckOptions& opt = {});

// layer_neighbors / connection_count against exhaustive enumeration (n <= 10),
// handshake identity (n <= 30), generator conservation (n <= 20), k-sequence
// monotonicity (6s <= n <= 60).
CheckReport check_layer_structure(const CheckOptions& opt = {});

// local_common_layers against per-pair brute force over 2-paths
// (n <= 10 all s; n <= 12 for s <= 4), plus reachable_pair completeness.
CheckReport check_local_common_layers(const CheckOptions& opt = {});

// BFS component counts: two parity components for even s, one for odd s
// (n <= 12).
CheckReport check_connectivity(const CheckOptions& opt = {});

// Norm drift over 1000 steps at (8,3); distribution sums; the 1/n cap on
// intermediate vertices; layer uniformity.
CheckReport check_unitarity(const CheckOptions& opt = {});

// Measured-walk pipelines: recursion vs projective simulation (n <= 8,
// s in {1,3}, T <= 200), the even-time alpha identity, odd-time support,
// absorption-bound ratio report, alpha-gap regression at (200,1).
CheckReport check_measured_equivalence(const CheckOptions& opt = {});

// Classical search, divisible leg: success on every seed and query budget
// (m^2+m) n/s across valid (n <= 18, s in {1,2}) plus (21,3).
CheckReport check_classical_oracle_divisible(const CheckOptions& opt = {});

// Classical search, non-divisible leg: (19,3), empirical success within
// 3 sigma of 1/m over the trial count (default 10^4), budget on every trial.
CheckReport check_classical_oracle_nondivisible(const CheckOptions& opt = {});

// Quantum search against the renamed dense walk; mass at the antipode equals
// the squared hit amplitude at the predicted time.
CheckReport check_quantum_oracle(const CheckOptions& opt = {});

using CheckFn = std::function<CheckReport(const CheckOptions&)>;

// name -> check, in presentation order.
const std::vector<std::pair<std::string, CheckFn>>& check_registry();

}  // namespace qwalk
