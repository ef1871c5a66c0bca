#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

// Exact combinatorics for walks on Cay(Z_2^n, {|e|=s}): binomials, weight
// characteristics d_k, Kravchuk coefficients and the eigenphases they induce.
// Everything integer-valued is computed in arbitrary precision; division by
// the degree m happens once, when a value is converted to double.

namespace qwalk {

// C(n,k); zero when k < 0 or k > n.
mpz_class binom(long n, long k);

mpz_class factorial(long n);

// num/den as a correctly rounded double (via 128-bit intermediate).
double rational_to_double(const mpz_class& num, const mpz_class& den);

// The walk family: all weight-s vectors of Z_2^n as generating set,
// degree m = C(n,s).
struct WalkSpec {
    int n;
    int s;
    mpz_class m;

    WalkSpec(int n_, int s_);

    // m as a checked signed 64-bit value (throws when it does not fit).
    long long m_int64() const;
    double m_double() const { return m.get_d(); }
};

// d_k = #{e : |e|=s, <e,v> odd} for any |v| = k, i.e.
// sum over odd l of C(k,l) C(n-k,s-l).
mpz_class weight_characteristic(const WalkSpec& spec, int k);

// Kravchuk coefficient phi_{k,n}(s) = sum_l (-1)^l C(k,l) C(n-k,s-l).
// Satisfies m - 2 d_k = phi_{k,n}(s).
mpz_class kravchuk(int n, int k, int s);

// Coefficient list of (1-x)^k (1+x)^(n-k), length n+1; entry s equals
// kravchuk(n,k,s). Independent route used for cross-checking.
std::vector<mpz_class> kravchuk_via_generating_function(int n, int k);

// d_k mod 2 without evaluating d_k: 0 for even k, C(n-1,s-1) mod 2 for odd k.
int d_parity(const WalkSpec& spec, int k);

struct Eigenphase {
    double cos_omega;  // 1 - 2 d_k / m
    double omega;      // arccos, in [0, pi]
};

Eigenphase eigenphase(const WalkSpec& spec, int k);

struct SpectralRow {
    mpz_class d;
    double cos_omega;
    double omega;
    int parity;  // d mod 2
};

struct SpectralTable {
    WalkSpec spec;
    std::vector<SpectralRow> rows;  // k = 0..n
};

SpectralTable spectral_table(const WalkSpec& spec);

struct KravchukBound {
    double lhs;    // |cos omega_k|
    double rhs;    // 2 (1-s/n)^(-s) (s+1)! delta^s
    double delta;  // sqrt(2 f(n) / n)
};

// Bound on |cos omega_k| inside the window |k - n/2| <= (n/2) delta.
// Throws std::domain_error when k lies outside the window.
KravchukBound kravchuk_bound(const WalkSpec& spec, int k, double f_of_n);

}  // namespace qwalk
