#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "qwalk/combinatorics.hpp"
#include "qwalk/dense_sim.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

TEST_CASE("symmetric generating set enumeration") {
    const auto g31 = symmetric_generating_set(3, 1);
    CHECK(g31.elements == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(symmetric_generating_set(4, 2).m() == 6);
    for (int n = 2; n <= 10; ++n)
        for (int s = 1; s < n; ++s)
            CHECK(symmetric_generating_set(n, s).m() == binom(n, s).get_si());
}

TEST_CASE("generating set validation") {
    CHECK_THROWS_AS(make_generating_set(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_generating_set(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_generating_set(3, {8}), std::invalid_argument);
    CHECK_NOTHROW(make_generating_set(3, {1, 6}));
}

TEST_CASE("one step from the symmetric state spreads along generators") {
    // Grover coin fixes the uniform coin state, so after one step the walker
    // sits on |b, e_b> with amplitude 1/sqrt(m)
    auto state = DenseState::symmetric_initial(symmetric_generating_set(2, 1));
    step(state);
    const int m = state.gens.m();
    for (int b = 0; b < m; ++b) {
        const std::uint32_t e = state.gens.elements[b];
        CHECK(state.amp[std::size_t{e} * m + b].real() ==
              doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    CHECK(state.norm() == doctest::Approx(1.0));
}

TEST_CASE("evolve(0) is the identity and unitarity holds over many steps") {
    auto state = DenseState::symmetric_initial(symmetric_generating_set(6, 2));
    const auto before = state.amp;
    evolve(state, 0);
    CHECK(state.amp == before);
    evolve(state, 100);
    CHECK(std::abs(state.norm() - 1.0) < 1e-12);
}

TEST_CASE("spectral sums reproduce dense projections") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {5, 4}}) {
        WalkSpec spec(n, s);
        const SpectralSums sums = spectral_sums(spec);
        auto state = DenseState::symmetric_initial(symmetric_generating_set(n, s));
        const std::uint32_t antipode =
            static_cast<std::uint32_t>(state.gens.vertex_count() - 1);
        for (long long t = 0; t <= 60; ++t) {
            CHECK(std::abs(symmetric_overlap(state, 0)) ==
                  doctest::Approx(std::abs(sums.return_amplitude(t))).epsilon(1e-10));
            CHECK(std::abs(symmetric_overlap(state, antipode)) ==
                  doctest::Approx(std::abs(sums.hit_amplitude(t))).epsilon(1e-10));
            step(state);
        }
    }
}

TEST_CASE("vertex distribution: point mass, normalization, layer uniformity") {
    auto state = DenseState::symmetric_initial(symmetric_generating_set(5, 2));
    auto dist = vertex_distribution(state);
    CHECK(dist[0] == doctest::Approx(1.0));
    evolve(state, 17);
    dist = vertex_distribution(state);
    CHECK(std::accumulate(dist.begin(), dist.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t v = 0; v < dist.size(); ++v)
        for (std::size_t u = 0; u < dist.size(); ++u)
            if (std::popcount(v) == std::popcount(u))
                CHECK(dist[v] == doctest::Approx(dist[u]).epsilon(1e-12));
}

TEST_CASE("permutation equivariance of the symmetric walk") {
    const int n = 6, s = 2;
    std::mt19937 rng(11);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto apply = [&](std::uint32_t v) {
        std::uint32_t out = 0;
        for (int i = 0; i < n; ++i)
            if (v & (1u << i)) out |= 1u << perm[i];
        return out;
    };
    auto state = DenseState::symmetric_initial(symmetric_generating_set(n, s));
    evolve(state, 13);
    const auto dist = vertex_distribution(state);
    for (std::uint32_t v = 0; v < state.gens.vertex_count(); ++v)
        CHECK(dist[v] == doctest::Approx(dist[apply(v)]).epsilon(1e-12));
}

TEST_CASE("coin eigensystem census") {
    // d=0 is the Grover coin itself: the uniform state is fixed, the rest flips
    auto e0 = coin_eigensystem(5, 0);
    CHECK(e0.mult_plus_one == 1);
    CHECK(e0.mult_minus_one == 4);
    CHECK_FALSE(e0.nontrivial.has_value());

    // d=m is its negation
    auto em = coin_eigensystem(5, 5);
    CHECK(em.mult_plus_one == 4);
    CHECK(em.mult_minus_one == 1);

    // m=4, d=2: the pair is +-i, one +1 and one -1
    auto e42 = coin_eigensystem(4, 2);
    CHECK(e42.mult_plus_one == 1);
    CHECK(e42.mult_minus_one == 1);
    REQUIRE(e42.nontrivial.has_value());
    CHECK(e42.nontrivial->real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e42.nontrivial->imag() == doctest::Approx(1.0).epsilon(1e-12));

    for (int m = 2; m <= 9; ++m)
        for (int d = 1; d <= m - 1; ++d) {
            auto e = coin_eigensystem(m, d);
            CHECK(e.mult_plus_one == d - 1);
            CHECK(e.mult_minus_one == m - d - 1);
            REQUIRE(e.nontrivial.has_value());
            const auto want = coin_lambda(m, d);
            CHECK(e.nontrivial->real() == doctest::Approx(want.real()).epsilon(1e-9));
            CHECK(e.nontrivial->imag() == doctest::Approx(want.imag()).epsilon(1e-9));
            CHECK(std::abs(*e.nontrivial) == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("connected components split by parity exactly for even s") {
    auto comp52 = connected_components(symmetric_generating_set(5, 2));
    CHECK(comp52.count == 2);
    long long even = 0;
    for (std::size_t v = 0; v < comp52.label.size(); ++v)
        if (comp52.label[v] == comp52.label[0]) ++even;
    CHECK(even == 16);
    CHECK(connected_components(symmetric_generating_set(5, 3)).count == 1);
}

TEST_CASE("code weight coefficients") {
    // s=1: A is the identity, so W_k = C(n,k)
    const auto w41 = code_weight_coefficients(symmetric_generating_set(4, 1));
    CHECK(w41 == std::vector<std::uint64_t>{1, 4, 6, 4, 1});

    for (auto [n, s] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}}) {
        WalkSpec spec(n, s);
        const auto w = code_weight_coefficients(symmetric_generating_set(n, s));
        CHECK(std::accumulate(w.begin(), w.end(), std::uint64_t{0}) ==
              std::uint64_t{1} << n);
        // W accumulates C(n,k) at index d_k
        std::vector<std::uint64_t> expect(w.size(), 0);
        for (int k = 0; k <= n; ++k)
            expect[weight_characteristic(spec, k).get_ui()] += binom(n, k).get_ui();
        CHECK(w == expect);
    }
}

TEST_CASE("state records round out the full amplitude list") {
    auto state = DenseState::symmetric_initial(symmetric_generating_set(3, 1));
    evolve(state, 5);
    const auto recs = state_records(state);
    CHECK(recs.size() == state.amp.size());
    double norm2 = 0.0;
    for (const auto& r : recs) norm2 += r.re * r.re + r.im * r.im;
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
}
