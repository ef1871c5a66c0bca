#pragma once

#include <vector>

#include "qwalk/combinatorics.hpp"

// Closed-form return/hit amplitudes of the coined walk on Cay(Z_2^n, {|e|=s})
// with the Grover coin and symmetric start at the origin:
//
//   A(t) = sum_k 2^-n C(n,k) cos(omega_k t)          (return)
//   H(t) = sum_k 2^-n (-1)^k C(n,k) cos(omega_k t)   (hit the all-ones vertex)
//
// and the predicted return/hit times near pi*m and (pi/2)*m.

namespace qwalk {

// 2^-n C(n,k) for k = 0..n. Exact rational weights up to n = 64, log-domain
// evaluation above (the naive product underflows while the sum stays O(1)).
std::vector<double> binomial_weights(int n);

// Precomputed weights and phases; cheap repeated evaluation over t.
struct SpectralSums {
    int n;
    std::vector<double> weight;
    std::vector<double> omega;

    double return_amplitude(long long t) const;
    double hit_amplitude(long long t) const;
};

SpectralSums spectral_sums(const WalkSpec& spec);

double return_amplitude(const WalkSpec& spec, long long t);
double hit_amplitude(const WalkSpec& spec, long long t);

enum class Target { Origin, Antipode };

struct ProbabilityQuery {
    WalkSpec spec;
    long long t = 0;
    Target target = Target::Origin;
};

// Squared projection amplitude for a single query.
double probability(const ProbabilityQuery& query);

enum class TimeKind { ReturnAtPiM, ReturnAtHalfPiM, HitAtHalfPiM };

struct TimePrediction {
    WalkSpec spec;
    long long T;
    long long epsilon;  // round(n^(beta*s))
    double beta;
    TimeKind kind;
    bool parity_ok;          // 2 | (T - m), enforced by construction
    bool side_condition_ok;  // s! <= n^(s/8)
};

// T = round(c*m) + epsilon with c = pi or pi/2, bumped by one step when
// needed so that T == m (mod 2). Kinds at (pi/2)m require the parity of
// C(n-1,s-1): odd for hitting, even for returning; violations throw
// std::domain_error naming the failed congruence.
TimePrediction predict_time(const WalkSpec& spec, TimeKind kind, double beta = 0.3);

struct CurvePoint {
    long long t;
    double return_prob;
    double hit_prob;
};

std::vector<CurvePoint> probability_curve(const WalkSpec& spec,
                                          const std::vector<long long>& ts);

}  // namespace qwalk
