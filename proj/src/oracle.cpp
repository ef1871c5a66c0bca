#include "qwalk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qwalk/combinatorics.hpp"
#include "qwalk/dense_sim.hpp"
#include "qwalk/layers.hpp"

namespace qwalk {

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Exactly uniform pick in [0, size); mask-rejection keeps it portable.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t size) {
    std::uint64_t mask = std::bit_ceil(size) - 1;
    std::uint64_t r;
    do {
        r = rng() & mask;
    } while (r >= size);
    return r;
}

// Minimal open-addressing name -> value map; the search loops live in here.
class FlatMap {
public:
    explicit FlatMap(std::size_t capacity) {
        std::size_t want = std::bit_ceil(capacity * 2 + 2);
        keys_.assign(want, kEmpty);
        vals_.assign(want, 0);
        mask_ = want - 1;
    }
    void insert(Name key, std::uint32_t value) {
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
        keys_[i] = key;
        vals_[i] = value;
    }
    // returns ~0u when absent
    std::uint32_t find(Name key) const {
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != kEmpty) {
            if (keys_[i] == key) return vals_[i];
            i = (i + 1) & mask_;
        }
        return ~0u;
    }

private:
    static constexpr Name kEmpty = ~Name{0};  // names are 2n <= 40 bits
    std::vector<Name> keys_;
    std::vector<std::uint32_t> vals_;
    std::size_t mask_ = 0;
};

std::string hex_name(Name x, int digits) {
    std::string out(digits, '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[i] = "0123456789abcdef"[x & 0xf];
        x >>= 4;
    }
    return out;
}

}  // namespace

OracleGraph::OracleGraph(int n, int s, std::uint64_t seed)
    : n_(n), s_(s), seed_(seed) {
    if (n < 2 || s < 1 || s >= n)
        throw std::invalid_argument("OracleGraph: need 1 <= s < n");
    if (6 * s >= n)
        throw std::invalid_argument(
            "OracleGraph: refused, s >= n/6 breaks the unique-antipode premise");
    if (n > 20) throw std::invalid_argument("OracleGraph: n > 20 not materializable");

    GeneratingSet gens = symmetric_generating_set(n, s);
    elements_ = std::move(gens.elements);
    m_ = static_cast<int>(elements_.size());

    const std::size_t V = std::size_t{1} << n_;
    const Name name_mask = (Name{1} << (2 * n_)) - 1;
    std::size_t want = std::bit_ceil(V * 2);
    slots_.assign(want, 0);
    slot_mask_ = static_cast<std::uint32_t>(want - 1);
    names_.resize(V);

    std::mt19937_64 rng(seed);
    for (std::size_t v = 0; v < V; ++v) {
        for (;;) {
            Name cand = rng() & name_mask;
            std::size_t i = mix64(cand) & slot_mask_;
            bool dup = false;
            while (slots_[i] != 0) {
                if (names_[slots_[i] - 1] == cand) {
                    dup = true;
                    break;
                }
                i = (i + 1) & slot_mask_;
            }
            if (dup) continue;
            slots_[i] = static_cast<std::uint32_t>(v + 1);
            names_[v] = cand;
            break;
        }
    }
    sorted_names_ = names_;
    std::sort(sorted_names_.begin(), sorted_names_.end());
}

std::uint32_t OracleGraph::lookup(Name name) const {
    std::size_t i = mix64(name) & slot_mask_;
    while (slots_[i] != 0) {
        if (names_[slots_[i] - 1] == name) return slots_[i];
        i = (i + 1) & slot_mask_;
    }
    return 0;
}

std::optional<Name> OracleGraph::query(Name name, int index) {
    ++query_count_;
    std::optional<Name> reply;
    const std::uint32_t hit = lookup(name);
    if (hit != 0 && index >= 1 && index <= m_)
        reply = names_[(hit - 1) ^ elements_[index - 1]];
    if (recording_) transcript_.push_back(TranscriptEntry{name, index, reply});
    return reply;
}

bool OracleGraph::query_all(Name name, Name* out) {
    query_count_ += m_;
    const std::uint32_t hit = lookup(name);
    if (hit == 0) {
        if (recording_)
            for (int b = 1; b <= m_; ++b)
                transcript_.push_back(TranscriptEntry{name, b, std::nullopt});
        return false;
    }
    const std::uint32_t v = hit - 1;
    for (int b = 0; b < m_; ++b) {
        if (b + 16 < m_) __builtin_prefetch(&names_[v ^ elements_[b + 16]]);
        out[b] = names_[v ^ elements_[b]];
    }
    if (recording_)
        for (int b = 0; b < m_; ++b)
            transcript_.push_back(TranscriptEntry{name, b + 1, out[b]});
    return true;
}

void OracleGraph::set_recording(bool on) {
    recording_ = on;
    if (!on) transcript_.clear();
}

Name OracleGraph::true_antipode_name() const {
    return names_[(std::size_t{1} << n_) - 1];
}

std::optional<std::uint32_t> OracleGraph::decode_name(Name name) const {
    const std::uint32_t hit = lookup(name);
    if (hit == 0) return std::nullopt;
    return hit - 1;
}

std::vector<std::vector<std::uint32_t>> OracleGraph::shift_tables() const {
    const std::size_t V = names_.size();
    std::vector<std::uint32_t> pos(V);
    for (std::size_t v = 0; v < V; ++v) {
        auto it = std::lower_bound(sorted_names_.begin(), sorted_names_.end(), names_[v]);
        pos[v] = static_cast<std::uint32_t>(it - sorted_names_.begin());
    }
    std::vector<std::vector<std::uint32_t>> tables(m_);
    for (int b = 0; b < m_; ++b) {
        tables[b].resize(V);
        for (std::size_t v = 0; v < V; ++v)
            tables[b][pos[v]] = pos[v ^ elements_[b]];
    }
    return tables;
}

SearchResult classical_search(OracleGraph& oracle, Name start_name,
                              std::uint64_t seed) {
    const int n = oracle.n(), s = oracle.s(), m = oracle.m();
    const std::uint64_t count_before = oracle.query_count();
    std::mt19937_64 rng(seed);

    const auto finish = [&](std::optional<Name> answer) {
        const bool ok = answer && *answer == oracle.true_antipode_name();
        return SearchResult{answer, oracle.query_count() - count_before, ok};
    };

    // k(l) -> l over even l in [0, 2s]; injective since 6s < n.
    FlatMap k_inverse(2 * s + 2);
    for (int l = 0; l <= 2 * s; l += 2) {
        mpz_class k = binom(l, l / 2) * binom(n - l, s - l / 2);
        k_inverse.insert(k.get_ui(), static_cast<std::uint32_t>(l));
    }

    std::vector<Name> scratch(m);

    // shell of the start vertex: exactly f(L_s)
    std::vector<Name> ls(m);
    if (!oracle.query_all(start_name, ls.data())) return finish(std::nullopt);
    FlatMap ls_set(ls.size());
    for (Name x : ls) ls_set.insert(x, 1);

    Name v1 = ls[pick(rng, ls.size())];
    std::vector<Name> shell(m);
    oracle.query_all(v1, shell.data());

    // infer weights of the second shell by counting overlap with f(L_s)
    FlatMap weight_of(shell.size());
    for (Name u : shell) {
        oracle.query_all(u, scratch.data());
        std::uint32_t overlap = 0;
        for (int b = 0; b < m; ++b)
            if (ls_set.find(scratch[b]) != ~0u) ++overlap;
        std::uint32_t l = k_inverse.find(overlap);
        if (l == ~0u) return finish(std::nullopt);  // inference broken
        weight_of.insert(u, l);
    }

    // last rung from which a weight-(n-s) vertex is one hop away
    const int tmax = n / s;
    int rung = 0;
    for (int r = tmax; r >= 1; --r)
        if (r * s <= n && n - s <= n && layers_adjacent(r * s, n - s, n, s)) {
            rung = r;
            break;
        }

    int t = 1;
    Name v_t = v1;
    for (;;) {
        if ((t + 1) * s == n) {
            // the antipode sits in the current shell with known weight n
            for (Name u : shell)
                if (weight_of.find(u) == static_cast<std::uint32_t>(n))
                    return finish(u);
            return finish(v_t);
        }
        if (t == rung || (t + 1) * s > n) {
            // climb exhausted: take a weight-(n-s) neighbor, read one of its
            // neighbors at random (every weight-(n-s) vertex touches the antipode)
            std::vector<Name> cand;
            for (Name u : shell)
                if (weight_of.find(u) == static_cast<std::uint32_t>(n - s))
                    cand.push_back(u);
            if (cand.empty()) return finish(v_t);
            Name v_last = cand[pick(rng, cand.size())];
            auto reply = oracle.query(v_last, static_cast<int>(pick(rng, m)) + 1);
            return finish(reply);
        }

        // pick the next rung vertex and re-infer weights one shell up
        std::vector<Name> cand;
        for (Name u : shell)
            if (weight_of.find(u) == static_cast<std::uint32_t>((t + 1) * s))
                cand.push_back(u);
        if (cand.empty()) return finish(v_t);
        Name v_next = cand[pick(rng, cand.size())];
        std::vector<Name> next_shell(m);
        oracle.query_all(v_next, next_shell.data());

        FlatMap next_weight(next_shell.size());
        for (Name u : next_shell) {
            // j(u): lightest known common neighbor of u and v_t; u sits at j(u)+s
            oracle.query_all(u, scratch.data());
            std::uint32_t best = ~0u;
            for (int b = 0; b < m; ++b) {
                const std::uint32_t w = weight_of.find(scratch[b]);
                if (w < best) best = w;
            }
            if (best == ~0u) return finish(std::nullopt);
            next_weight.insert(u, best + s);
        }
        ++t;
        v_t = v_next;
        shell = std::move(next_shell);
        weight_of = std::move(next_weight);
    }
}

QuantumSearchResult quantum_search(OracleGraph& oracle, Name start_name,
                                   long long T) {
    if (T < 0) throw std::invalid_argument("quantum_search: T must be nonnegative");
    const int m = oracle.m();
    const std::size_t V = oracle.sorted_names().size();
    if (V * static_cast<std::size_t>(m) > (std::size_t{1} << 26))
        throw std::invalid_argument("quantum_search: state too large to simulate");

    const auto& names = oracle.sorted_names();
    auto it = std::lower_bound(names.begin(), names.end(), start_name);
    if (it == names.end() || *it != start_name)
        throw std::invalid_argument("quantum_search: start name is not a vertex");
    const std::size_t start = it - names.begin();

    const auto tables = oracle.shift_tables();
    std::vector<std::complex<double>> amp(V * m, {0.0, 0.0});
    const double a0 = 1.0 / std::sqrt(static_cast<double>(m));
    for (int b = 0; b < m; ++b) amp[start * m + b] = a0;

    for (long long step_i = 0; step_i < T; ++step_i) {
        const double scale = 2.0 / m;
        for (std::size_t i = 0; i < V; ++i) {
            auto* block = amp.data() + i * m;
            std::complex<double> sum{0.0, 0.0};
            for (int b = 0; b < m; ++b) sum += block[b];
            sum *= scale;
            for (int b = 0; b < m; ++b) block[b] = sum - block[b];
        }
        for (int b = 0; b < m; ++b) {
            const auto& tab = tables[b];
            for (std::size_t i = 0; i < V; ++i) {
                const std::size_t j = tab[i];
                if (i < j) std::swap(amp[i * m + b], amp[j * m + b]);
            }
        }
    }

    QuantumSearchResult out;
    out.steps = T;
    out.distribution.reserve(V);
    for (std::size_t i = 0; i < V; ++i) {
        double p = 0.0;
        for (int b = 0; b < m; ++b) p += std::norm(amp[i * m + b]);
        out.distribution.emplace_back(names[i], p);
    }
    const Name target = oracle.true_antipode_name();
    auto tit = std::lower_bound(names.begin(), names.end(), target);
    out.success_probability = out.distribution[tit - names.begin()].second;
    return out;
}

std::string format_transcript(const OracleGraph& oracle) {
    const int digits = (2 * oracle.n() + 3) / 4;
    std::string out;
    for (const auto& e : oracle.transcript()) {
        out += hex_name(e.query, digits);
        out += ' ';
        out += std::to_string(e.index);
        out += ' ';
        out += e.reply ? hex_name(*e.reply, digits) : std::string("-");
        out += '\n';
    }
    return out;
}

ReplayResult replay_transcript(OracleGraph& oracle, std::istream& in) {
    ReplayResult res{true, 0, {}};
    std::string qs, rs;
    int index;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!(ls >> qs >> index >> rs)) {
            res.ok = false;
            res.first_mismatch = "unparseable line: " + line;
            return res;
        }
        const Name q = std::stoull(qs, nullptr, 16);
        const auto reply = oracle.query(q, index);
        const std::string got =
            reply ? hex_name(*reply, (2 * oracle.n() + 3) / 4) : std::string("-");
        ++res.lines_checked;
        if (got != rs) {
            res.ok = false;
            res.first_mismatch = "line " + std::to_string(res.lines_checked) +
                                 ": expected " + rs + " got " + got;
            return res;
        }
    }
    return res;
}

}  // namespace qwalk
