#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

// Compensated (Kahan) accumulator; the return/hit sums are alternating and
// cancellation-sensitive.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

std::vector<double> binomial_weights(int n) {
    if (n < 1) throw std::invalid_argument("binomial_weights: n must be positive");
    std::vector<double> w(n + 1);
    if (n <= 64) {
        mpz_class pow2 = mpz_class(1) << n;
        for (int k = 0; k <= n; ++k) w[k] = rational_to_double(binom(n, k), pow2);
    } else {
        const double ln2 = std::numbers::ln2;
        for (int k = 0; k <= n; ++k)
            w[k] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0) - n * ln2);
    }
    return w;
}

double SpectralSums::return_amplitude(long long t) const {
    Kahan acc;
    for (int k = 0; k <= n; ++k)
        acc.add(weight[k] * std::cos(omega[k] * static_cast<double>(t)));
    return acc.sum;
}

double SpectralSums::hit_amplitude(long long t) const {
    Kahan acc;
    for (int k = 0; k <= n; ++k) {
        double term = weight[k] * std::cos(omega[k] * static_cast<double>(t));
        acc.add((k & 1) ? -term : term);
    }
    return acc.sum;
}

SpectralSums spectral_sums(const WalkSpec& spec) {
    SpectralSums sums;
    sums.n = spec.n;
    sums.weight = binomial_weights(spec.n);
    sums.omega.reserve(spec.n + 1);
    for (int k = 0; k <= spec.n; ++k) sums.omega.push_back(eigenphase(spec, k).omega);
    return sums;
}

double return_amplitude(const WalkSpec& spec, long long t) {
    if (t < 0) throw std::invalid_argument("return_amplitude: t must be nonnegative");
    return spectral_sums(spec).return_amplitude(t);
}

double hit_amplitude(const WalkSpec& spec, long long t) {
    if (t < 0) throw std::invalid_argument("hit_amplitude: t must be nonnegative");
    return spectral_sums(spec).hit_amplitude(t);
}

double probability(const ProbabilityQuery& query) {
    const double a = query.target == Target::Origin
                         ? return_amplitude(query.spec, query.t)
                         : hit_amplitude(query.spec, query.t);
    return a * a;
}

TimePrediction predict_time(const WalkSpec& spec, TimeKind kind, double beta) {
    if (!(beta > 0.25 && beta < 0.5))
        throw std::invalid_argument("predict_time: beta must lie in (1/4, 1/2)");
    const mpz_class c = binom(spec.n - 1, spec.s - 1);  // = m s / n
    const bool c_odd = mpz_odd_p(c.get_mpz_t());
    if (kind == TimeKind::HitAtHalfPiM && !c_odd)
        throw std::domain_error(
            "predict_time: hitting at (pi/2)m requires C(n-1,s-1) odd, got even");
    if (kind == TimeKind::ReturnAtHalfPiM && c_odd)
        throw std::domain_error(
            "predict_time: returning at (pi/2)m requires C(n-1,s-1) even, got odd");

    const long long m = spec.m_int64();
    if (m > (1LL << 60))
        throw std::overflow_error("predict_time: degree too large");
    const double factor = (kind == TimeKind::ReturnAtPiM) ? std::numbers::pi
                                                          : std::numbers::pi / 2.0;
    const long long eps = std::llround(std::pow(spec.n, beta * spec.s));
    long long T = std::llround(factor * static_cast<double>(m)) + eps;
    if ((T - m) % 2 != 0) T += 1;

    const bool side =
        std::lgamma(spec.s + 1.0) <= (spec.s / 8.0) * std::log(spec.n);
    return TimePrediction{spec, T, eps, beta, kind, true, side};
}

std::vector<CurvePoint> probability_curve(const WalkSpec& spec,
                                          const std::vector<long long>& ts) {
    if (ts.empty()) throw std::invalid_argument("probability_curve: empty t range");
    const SpectralSums sums = spectral_sums(spec);
    std::vector<CurvePoint> out;
    out.reserve(ts.size());
    for (long long t : ts) {
        if (t < 0) throw std::invalid_argument("probability_curve: t must be nonnegative");
        double a = sums.return_amplitude(t);
        double h = sums.hit_amplitude(t);
        out.push_back(CurvePoint{t, a * a, h * h});
    }
    return out;
}

}  // namespace qwalk
