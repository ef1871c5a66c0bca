#include "qwalk/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

mpz_class binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

double rational_to_double(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational_to_double: zero denominator");
    mpf_class q(0, 128);
    q = mpf_class(num, 128) / mpf_class(den, 128);
    return q.get_d();
}

WalkSpec::WalkSpec(int n_, int s_) : n(n_), s(s_) {
    if (n < 2 || s < 1 || s >= n)
        throw std::invalid_argument("WalkSpec: need 1 <= s < n");
    m = binom(n, s);
}

long long WalkSpec::m_int64() const {
    if (!m.fits_slong_p())
        throw std::overflow_error("WalkSpec: degree m does not fit in 64 bits");
    return static_cast<long long>(m.get_si());
}

mpz_class weight_characteristic(const WalkSpec& spec, int k) {
    if (k < 0 || k > spec.n)
        throw std::invalid_argument("weight_characteristic: k out of range");
    mpz_class d = 0;
    for (int l = 1; l <= spec.s; l += 2)
        d += binom(k, l) * binom(spec.n - k, spec.s - l);
    return d;
}

mpz_class kravchuk(int n, int k, int s) {
    if (k < 0 || k > n || s < 0 || s > n)
        throw std::invalid_argument("kravchuk: indices out of range");
    mpz_class phi = 0;
    for (int l = 0; l <= s; ++l) {
        mpz_class term = binom(k, l) * binom(n - k, s - l);
        if (l & 1)
            phi -= term;
        else
            phi += term;
    }
    return phi;
}

std::vector<mpz_class> kravchuk_via_generating_function(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("kravchuk_via_generating_function: k out of range");
    std::vector<mpz_class> poly{1};
    auto mul = [&poly](int sign) {
        // poly *= (1 + sign*x)
        std::vector<mpz_class> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            if (sign > 0)
                next[i + 1] += poly[i];
            else
                next[i + 1] -= poly[i];
        }
        poly = std::move(next);
    };
    for (int i = 0; i < k; ++i) mul(-1);
    for (int i = 0; i < n - k; ++i) mul(+1);
    return poly;
}

int d_parity(const WalkSpec& spec, int k) {
    if (k < 0 || k > spec.n)
        throw std::invalid_argument("d_parity: k out of range");
    if (k % 2 == 0) return 0;
    mpz_class c = binom(spec.n - 1, spec.s - 1);
    return static_cast<int>(mpz_odd_p(c.get_mpz_t()));
}

Eigenphase eigenphase(const WalkSpec& spec, int k) {
    mpz_class d = weight_characteristic(spec, k);
    double c = rational_to_double(spec.m - 2 * d, spec.m);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return Eigenphase{c, std::acos(c)};
}

SpectralTable spectral_table(const WalkSpec& spec) {
    SpectralTable table{spec, {}};
    table.rows.reserve(spec.n + 1);
    for (int k = 0; k <= spec.n; ++k) {
        mpz_class d = weight_characteristic(spec, k);
        double c = rational_to_double(spec.m - 2 * d, spec.m);
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        int par = static_cast<int>(mpz_odd_p(d.get_mpz_t()));
        table.rows.push_back(SpectralRow{std::move(d), c, std::acos(c), par});
    }
    return table;
}

KravchukBound kravchuk_bound(const WalkSpec& spec, int k, double f_of_n) {
    if (f_of_n <= 0.0)
        throw std::invalid_argument("kravchuk_bound: f(n) must be positive");
    const double n = spec.n;
    const double delta = std::sqrt(2.0 * f_of_n / n);
    if (std::abs(k - n / 2.0) > n / 2.0 * delta + 1e-12)
        throw std::domain_error("kravchuk_bound: k outside the delta window");
    const double lhs = std::abs(eigenphase(spec, k).cos_omega);
    const double rhs = 2.0 * std::pow(1.0 - spec.s / n, -spec.s) *
                       factorial(spec.s + 1).get_d() * std::pow(delta, spec.s);
    return KravchukBound{lhs, rhs, delta};
}

}  // namespace qwalk
