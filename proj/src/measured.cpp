#include "qwalk/measured.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/dense_sim.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

void check_measured_args(const WalkSpec& spec, int T0, int T) {
    if (spec.s % 2 == 0)
        throw std::invalid_argument("measured walk: s must be odd");
    if (T0 < 0 || T0 % 2 != 0)
        throw std::invalid_argument("measured walk: T0 must be even and nonnegative");
    if (T < 0) throw std::invalid_argument("measured walk: T must be nonnegative");
}

}  // namespace

std::vector<double> alpha_series(const WalkSpec& spec, long long T) {
    if (T < 0) throw std::invalid_argument("alpha_series: T must be nonnegative");
    const SpectralSums sums = spectral_sums(spec);
    std::vector<double> alpha(T + 1);
    for (long long t = 0; t <= T; ++t) alpha[t] = sums.return_amplitude(t);
    return alpha;
}

std::vector<double> beta_recursion(const std::vector<double>& alpha, int T0,
                                   int dt_max) {
    if (T0 < 0 || dt_max < 0)
        throw std::invalid_argument("beta_recursion: negative index");
    if (alpha.size() < static_cast<std::size_t>(T0 + dt_max) + 1)
        throw std::invalid_argument("beta_recursion: alpha too short");
    std::vector<double> beta(dt_max + 1);
    for (int k = 0; k <= dt_max; ++k) {
        double b = alpha[T0 + k];
        for (int j = 1; j <= k; ++j) b -= beta[k - j] * alpha[j];
        beta[k] = b;
    }
    return beta;
}

MeasuredTrace projective_simulation(const WalkSpec& spec, int T0, int T) {
    check_measured_args(spec, T0, T);
    if (spec.n > 12)
        throw std::invalid_argument("projective_simulation: n > 12 not materializable");

    const GeneratingSet gens = symmetric_generating_set(spec.n, spec.s);
    const int m = gens.m();
    DenseState measured = DenseState::symmetric_initial(gens);
    DenseState free = DenseState::symmetric_initial(gens);

    MeasuredTrace trace{spec, T0, {}, {}, {}, {}};
    trace.alpha.resize(T + 1);
    trace.q.assign(T + 1, 0.0);
    trace.beta.assign(std::max(T - T0, 0) + 1, 0.0);

    trace.alpha[0] = symmetric_overlap(free, 0).real();
    if (T0 == 0) trace.beta[0] = trace.alpha[0];

    for (int t = 1; t <= T; ++t) {
        if (t > T0) {
            // stop mass of the pre-step state, then project the origin out
            double q = 0.0;
            for (int b = 0; b < m; ++b) q += std::norm(measured.amp[b]);
            trace.q[t] = q;
            for (int b = 0; b < m; ++b) measured.amp[b] = 0.0;
        }
        step(measured);
        step(free);
        trace.alpha[t] = symmetric_overlap(free, 0).real();
        if (t >= T0) trace.beta[t - T0] = symmetric_overlap(measured, 0).real();
    }

    trace.p.resize(T + 1);
    double run = 0.0;
    for (int t = 0; t <= T; ++t) {
        run += trace.q[t];
        trace.p[t] = run;
    }
    trace.final_norm = measured.norm();
    return trace;
}

MeasuredTrace measured_trace_spectral(const WalkSpec& spec, int T0, int T) {
    check_measured_args(spec, T0, T);
    MeasuredTrace trace{spec, T0, {}, {}, {}, {}};
    trace.alpha = alpha_series(spec, T);
    if (T0 > T) {
        // measurement never starts inside the horizon
        trace.beta.assign(1, 0.0);
    } else {
        trace.beta = beta_recursion(trace.alpha, T0, T - T0);
    }
    trace.q.assign(T + 1, 0.0);
    for (int t = T0 + 1; t <= T; ++t)
        trace.q[t] = trace.beta[t - T0 - 1] * trace.beta[t - T0 - 1];
    trace.p.resize(T + 1);
    double run = 0.0;
    for (int t = 0; t <= T; ++t) {
        run += trace.q[t];
        trace.p[t] = run;
    }
    return trace;
}

AbsorptionReport absorption_bound_check(const WalkSpec& spec, int T0, int T_p,
                                        int T, double c) {
    check_measured_args(spec, T0, T);
    if (T0 > T_p)
        throw std::invalid_argument("absorption_bound_check: need T0 <= T_p");
    if (T_p > T) throw std::invalid_argument("absorption_bound_check: need T_p <= T");

    const MeasuredTrace trace = measured_trace_spectral(spec, T0, T);
    const double p_T = trace.p[T];
    const double eps = std::max(1.0, T_p - T / 2.0);
    const double denom = static_cast<double>(T - T_p) * (T - T_p);
    const double reference = denom > 0.0 ? spec.n / (eps * denom) : 0.0;
    const double bound = c * reference;
    const double ratio = reference > 0.0 ? p_T / reference : 0.0;
    return AbsorptionReport{p_T, bound, ratio, p_T >= bound, eps};
}

}  // namespace qwalk
