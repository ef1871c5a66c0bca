#include "qwalk/dense_sim.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qwalk {

GeneratingSet make_generating_set(int n, std::vector<std::uint32_t> elements) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("make_generating_set: n out of range [1,24]");
    if (elements.empty())
        throw std::invalid_argument("make_generating_set: empty generating set");
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t e : elements) {
        if (e == 0) throw std::invalid_argument("make_generating_set: zero generator");
        if (e >= (std::uint32_t{1} << n))
            throw std::invalid_argument("make_generating_set: generator out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("make_generating_set: duplicate generator");
    }
    return GeneratingSet{n, std::move(elements)};
}

GeneratingSet symmetric_generating_set(int n, int s) {
    if (n < 2 || s < 1 || s >= n)
        throw std::invalid_argument("symmetric_generating_set: need 1 <= s < n");
    if (n > 24) throw std::invalid_argument("symmetric_generating_set: n too large");
    std::vector<std::uint32_t> el;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
        if (std::popcount(v) == s) el.push_back(v);
    return GeneratingSet{n, std::move(el)};
}

DenseState DenseState::symmetric_initial(GeneratingSet gens, std::uint32_t vertex) {
    const int m = gens.m();
    if (vertex >= gens.vertex_count())
        throw std::invalid_argument("symmetric_initial: vertex out of range");
    DenseState st{std::move(gens), {}};
    st.amp.assign(st.gens.vertex_count() * m, {0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(m));
    for (int b = 0; b < m; ++b) st.amp[std::size_t{vertex} * m + b] = a;
    return st;
}

double DenseState::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void step(DenseState& state) {
    const int m = state.gens.m();
    const std::size_t V = state.gens.vertex_count();
    auto* amp = state.amp.data();

    // Grover coin per vertex block: a_b -> (2/m) sum_j a_j - a_b
    const double scale = 2.0 / m;
    for (std::size_t v = 0; v < V; ++v) {
        auto* block = amp + v * m;
        std::complex<double> sum{0.0, 0.0};
        for (int b = 0; b < m; ++b) sum += block[b];
        sum *= scale;
        for (int b = 0; b < m; ++b) block[b] = sum - block[b];
    }

    // Shift: within color b, swap v <-> v^e_b (the map is an involution).
    for (int b = 0; b < m; ++b) {
        const std::uint32_t e = state.gens.elements[b];
        for (std::size_t v = 0; v < V; ++v) {
            const std::size_t u = v ^ e;
            if (v < u) std::swap(amp[v * m + b], amp[u * m + b]);
        }
    }
}

void evolve(DenseState& state, long long t) {
    if (t < 0) throw std::invalid_argument("evolve: t must be nonnegative");
    for (long long i = 0; i < t; ++i) step(state);
}

std::vector<double> vertex_distribution(const DenseState& state) {
    const int m = state.gens.m();
    const std::size_t V = state.gens.vertex_count();
    std::vector<double> p(V, 0.0);
    for (std::size_t v = 0; v < V; ++v)
        for (int b = 0; b < m; ++b) p[v] += std::norm(state.amp[v * m + b]);
    return p;
}

std::complex<double> symmetric_overlap(const DenseState& state, std::uint32_t vertex) {
    const int m = state.gens.m();
    std::complex<double> s{0.0, 0.0};
    for (int b = 0; b < m; ++b) s += state.amp[std::size_t{vertex} * m + b];
    return s / std::sqrt(static_cast<double>(m));
}

std::complex<double> coin_lambda(int m, int d) {
    if (m < 1 || d < 0 || d > m) throw std::invalid_argument("coin_lambda: bad d");
    const double md = m;
    return {1.0 - 2.0 * d / md, 2.0 / md * std::sqrt(double(d) * double(m - d))};
}

CoinEigensystem coin_eigensystem(int m, int d) {
    if (m < 1 || d < 0 || d > m)
        throw std::invalid_argument("coin_eigensystem: need 0 <= d <= m");
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = 2.0 / m - (i == j ? 1.0 : 0.0);
    for (int i = m - d; i < m; ++i) g.row(i) *= -1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(g);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("coin_eigensystem: eigensolver failed");

    CoinEigensystem out;
    out.m = m;
    out.d = d;
    const double tol = 1e-9;
    for (int i = 0; i < m; ++i) {
        std::complex<double> ev = solver.eigenvalues()(i);
        if (std::abs(ev - 1.0) < tol)
            ++out.mult_plus_one;
        else if (std::abs(ev + 1.0) < tol)
            ++out.mult_minus_one;
        else if (ev.imag() > 0.0)
            out.nontrivial = ev;
    }
    return out;
}

Components connected_components(const GeneratingSet& gens) {
    const std::size_t V = gens.vertex_count();
    Components out;
    out.label.assign(V, -1);
    std::vector<std::uint32_t> stack;
    for (std::size_t start = 0; start < V; ++start) {
        if (out.label[start] >= 0) continue;
        const int id = out.count++;
        out.label[start] = id;
        stack.push_back(static_cast<std::uint32_t>(start));
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t e : gens.elements) {
                std::uint32_t u = v ^ e;
                if (out.label[u] < 0) {
                    out.label[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> code_weight_coefficients(const GeneratingSet& gens) {
    const int m = gens.m();
    const std::size_t V = gens.vertex_count();
    std::vector<std::uint64_t> w(m + 1, 0);
    for (std::size_t v = 0; v < V; ++v) {
        int weight = 0;
        for (std::uint32_t e : gens.elements)
            weight += std::popcount(e & static_cast<std::uint32_t>(v)) & 1;
        ++w[weight];
    }
    return w;
}

std::vector<StateRecord> state_records(const DenseState& state) {
    const int m = state.gens.m();
    const std::size_t V = state.gens.vertex_count();
    std::vector<StateRecord> recs;
    recs.reserve(V * m);
    for (int b = 0; b < m; ++b)
        for (std::size_t v = 0; v < V; ++v) {
            const auto& a = state.amp[v * m + b];
            recs.push_back(StateRecord{b + 1, static_cast<std::uint32_t>(v),
                                       a.real(), a.imag()});
        }
    return recs;
}

}  // namespace qwalk
