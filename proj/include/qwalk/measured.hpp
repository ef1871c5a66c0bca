#pragma once

#include <vector>

#include "qwalk/combinatorics.hpp"

// The origin-measured (absorbing) walk: after time T0 every step first
// projects out the origin block, and the removed mass is the per-step stop
// probability. Two routes are provided: the beta convolution recursion on
// top of the spectral alpha series (fast, any n), and a dense projective
// simulation (small n, the ground-truth oracle).
//
// Only odd s is supported: odd s is exactly the condition under which the
// walk has no odd-time mass at the origin, which the recursion relies on.

namespace qwalk {

// alpha_t = <psi_0| S^t |psi_0> for t = 0..T, from the spectral sum.
std::vector<double> alpha_series(const WalkSpec& spec, long long T);

// beta_k = alpha_{T0+k} - sum_{j=1..k} beta_{k-j} alpha_j, k = 0..dt_max.
// alpha must cover indices up to T0 + dt_max.
std::vector<double> beta_recursion(const std::vector<double>& alpha, int T0,
                                   int dt_max);

struct MeasuredTrace {
    WalkSpec spec;
    int T0;
    std::vector<double> alpha;  // t = 0..T, unmeasured overlap
    std::vector<double> beta;   // dt = 0..T-T0, overlap of the measured walk
    std::vector<double> q;      // t = 0..T, stop probability (0 for t <= T0)
    std::vector<double> p;      // running sum of q
    double final_norm = -1.0;   // projective pipeline only; p_T + norm^2 = 1
};

// Dense evolution with the projection applied inside each step past T0.
// q_t records the origin mass of the pre-step state, so q_{T0+dt} = beta_{dt-1}^2.
MeasuredTrace projective_simulation(const WalkSpec& spec, int T0, int T);

// Same trace assembled from the spectral alpha series and the recursion.
MeasuredTrace measured_trace_spectral(const WalkSpec& spec, int T0, int T);

struct AbsorptionReport {
    double p_T;      // total stop probability until T
    double bound;    // c * n / (eps * (T - T_p)^2)
    double ratio;    // p_T / (n / (eps * (T - T_p)^2))
    bool satisfied;  // p_T >= bound
    double epsilon;  // max(1, T_p - T/2)
};

AbsorptionReport absorption_bound_check(const WalkSpec& spec, int T0, int T_p,
                                        int T, double c = 1.0);

}  // namespace qwalk
