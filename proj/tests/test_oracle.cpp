#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "qwalk/dense_sim.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

TEST_CASE("oracle construction guards") {
    CHECK_THROWS_AS(OracleGraph(12, 2, 1), std::invalid_argument);  // s >= n/6
    CHECK_THROWS_AS(OracleGraph(18, 3, 1), std::invalid_argument);
    CHECK_NOTHROW(OracleGraph(13, 2, 1));
    CHECK_NOTHROW(OracleGraph(7, 1, 1));
}

TEST_CASE("oracle query semantics and counting") {
    OracleGraph oracle(8, 1, 42);
    const Name start = oracle.start_name();

    // neighbor of a neighbor along the same color returns to the start
    const auto u = oracle.query(start, 3);
    REQUIRE(u.has_value());
    CHECK(oracle.query(*u, 3) == start);

    // invalid index and invalid name give empty replies but still count
    CHECK_FALSE(oracle.query(start, 0).has_value());
    CHECK_FALSE(oracle.query(start, 9).has_value());
    const std::uint64_t before = oracle.query_count();
    Name bogus = start ^ 0x5555u;
    if (oracle.decode_name(bogus)) bogus ^= 0x2a2au;
    CHECK_FALSE(oracle.query(bogus, 1).has_value());
    CHECK(oracle.query_count() == before + 1);

    // names are distinct and confined to 2n bits
    std::set<Name> seen;
    for (int b = 1; b <= oracle.m(); ++b) {
        const auto r = oracle.query(start, b);
        REQUIRE(r.has_value());
        CHECK(*r < (Name{1} << oracle.name_bits()));
        seen.insert(*r);
    }
    CHECK(seen.size() == static_cast<std::size_t>(oracle.m()));
}

TEST_CASE("oracle names differ across seeds but structure is preserved") {
    OracleGraph a(7, 1, 1), b(7, 1, 2);
    CHECK(a.start_name() != b.start_name());
    // reciprocity in both
    for (auto* o : {&a, &b})
        for (int k = 1; k <= o->m(); ++k) {
            const auto u = o->query(o->start_name(), k);
            CHECK(o->query(*u, k) == o->start_name());
        }
}

TEST_CASE("classical search succeeds deterministically when s divides n") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{7, 1}, {10, 1}, {14, 2}}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            OracleGraph oracle(n, s, 100 + seed);
            const auto res = classical_search(oracle, oracle.start_name(), 31 * seed + 7);
            CHECK(res.success);
            CHECK(res.answer == oracle.true_antipode_name());
            CHECK(res.queries == oracle.query_count());
            const double m = oracle.m();
            CHECK(static_cast<double>(res.queries) <= (m * m + m) * n / s);
        }
    }
}

TEST_CASE("classical search final hop paths for both ladder parities") {
    // 19 = 6*3+1 ends one rung early; 20 = 6*3+2 ends at the top rung
    for (int n : {19, 20}) {
        const int s = 3;
        long long hits = 0;
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            OracleGraph oracle(n, s, 500 + seed);
            const auto res = classical_search(oracle, oracle.start_name(), seed);
            REQUIRE(res.answer.has_value());
            const double m = oracle.m();
            CHECK(static_cast<double>(res.queries) <= (m * m + m) * n / s);
            if (res.success) ++hits;
            // the returned name decodes to a real vertex
            CHECK(oracle.decode_name(*res.answer).has_value());
        }
        // success probability is only 1/m; a handful of trials should rarely hit
        CHECK(hits <= 3);
    }
}

TEST_CASE("quantum search is the renamed dense walk") {
    OracleGraph oracle(7, 1, 9);
    const int T = 25;
    const auto qres = quantum_search(oracle, oracle.start_name(), T);

    auto state = DenseState::symmetric_initial(symmetric_generating_set(7, 1));
    evolve(state, T);
    const auto dist = vertex_distribution(state);
    double total = 0.0;
    for (const auto& [name, prob] : qres.distribution) {
        const auto v = oracle.decode_name(name);
        REQUIRE(v.has_value());
        CHECK(prob == doctest::Approx(dist[*v]).epsilon(1e-10));
        total += prob;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(qres.steps == T);
}

TEST_CASE("quantum search at T=0 is a point mass on the start") {
    OracleGraph oracle(7, 1, 4);
    const auto qres = quantum_search(oracle, oracle.start_name(), 0);
    for (const auto& [name, prob] : qres.distribution)
        CHECK(prob == doctest::Approx(name == oracle.start_name() ? 1.0 : 0.0));
}

TEST_CASE("quantum success probability matches the hit amplitude") {
    WalkSpec spec(8, 1);
    const auto pred = predict_time(spec, TimeKind::HitAtHalfPiM);
    OracleGraph oracle(8, 1, 77);
    const auto qres = quantum_search(oracle, oracle.start_name(), pred.T);
    CHECK(qres.success_probability ==
          doctest::Approx(std::pow(hit_amplitude(spec, pred.T), 2)).epsilon(1e-9));
}

TEST_CASE("transcript export and replay") {
    OracleGraph oracle(7, 1, 3);
    oracle.set_recording(true);
    classical_search(oracle, oracle.start_name(), 5);
    const std::string transcript = format_transcript(oracle);
    CHECK(transcript.find('\n') != std::string::npos);

    // a fresh oracle with the same seed replays cleanly
    OracleGraph replayed(7, 1, 3);
    std::istringstream in(transcript);
    const auto res = replay_transcript(replayed, in);
    CHECK(res.ok);
    CHECK(res.lines_checked == oracle.transcript().size());

    // a different seed renames everything and must mismatch
    OracleGraph other(7, 1, 4);
    std::istringstream in2(transcript);
    CHECK_FALSE(replay_transcript(other, in2).ok);
}
