#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

// Brute-force state-vector simulator of the coined walk on Cay(Z_2^n, S).
// The walk operator is applied in factored form: the Grover coin as a rank-1
// update per vertex block, the shift as an index XOR permutation. No walk
// matrix is ever materialized.

namespace qwalk {

struct GeneratingSet {
    int n = 0;
    std::vector<std::uint32_t> elements;  // distinct nonzero bitmasks < 2^n

    int m() const { return static_cast<int>(elements.size()); }
    std::size_t vertex_count() const { return std::size_t{1} << n; }
};

// Validates: n in [1,24], elements distinct, nonzero, within range.
GeneratingSet make_generating_set(int n, std::vector<std::uint32_t> elements);

// All C(n,s) weight-s bitmasks in increasing integer order (coordinate i is
// bit i-1), the canonical coloring order.
GeneratingSet symmetric_generating_set(int n, int s);

// Amplitudes laid out vertex-major: amp[v*m + b] multiplies |b+1, v>.
struct DenseState {
    GeneratingSet gens;
    std::vector<std::complex<double>> amp;

    static DenseState symmetric_initial(GeneratingSet gens, std::uint32_t vertex = 0);
    double norm() const;
};

// One application of S (C_m (x) I): Grover coin on every vertex block, then
// the shift |b,v> -> |b, v xor e_b>.
void step(DenseState& state);

void evolve(DenseState& state, long long t);

// Per-vertex probabilities; sums to 1 for a normalized state.
std::vector<double> vertex_distribution(const DenseState& state);

// <Psi, vertex | state> where Psi is the uniform coin state.
std::complex<double> symmetric_overlap(const DenseState& state, std::uint32_t vertex);

// Grover coin with the rows indexed by the last d colors negated; lambda_d is
// its nontrivial eigenvalue 1 - 2d/m + (2i/m) sqrt(d(m-d)).
std::complex<double> coin_lambda(int m, int d);

struct CoinEigensystem {
    int m = 0;
    int d = 0;
    int mult_plus_one = 0;
    int mult_minus_one = 0;
    std::optional<std::complex<double>> nontrivial;  // the Im > 0 member of the pair
};

// Numeric eigendecomposition of the d-negated Grover coin, with eigenvalues
// classified against the +1 / -1 / conjugate-pair census.
CoinEigensystem coin_eigensystem(int m, int d);

struct Components {
    int count = 0;
    std::vector<int> label;  // size 2^n, component id per vertex
};

Components connected_components(const GeneratingSet& gens);

// W_j = #{v in Z_2^n : |Av| = j} with (Av)_i = <e_i, v> mod 2; the message
// space is enumerated exhaustively.
std::vector<std::uint64_t> code_weight_coefficients(const GeneratingSet& gens);

struct StateRecord {
    int coin;  // 1-based color
    std::uint32_t vertex;
    double re;
    double im;
};

std::vector<StateRecord> state_records(const DenseState& state);

}  // namespace qwalk
