#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// The antipodal-vertex search problem on a name-obfuscated Cay(Z_2^n, {|e|=s}):
// vertices are known only through random 2n-bit names; the oracle answers
// (name, color) -> neighbor name and counts every invocation. Neighbor
// numbering follows the canonical generator order, which makes the numbering
// reciprocal (v ^ e_k ^ e_k = v).

namespace qwalk {

using Name = std::uint64_t;

struct TranscriptEntry {
    Name query;
    int index;
    std::optional<Name> reply;
};

class OracleGraph {
public:
    // Requires s < n/6 (unique antipodal vertex) and n <= 20 (materializable).
    OracleGraph(int n, int s, std::uint64_t seed);

    int n() const { return n_; }
    int s() const { return s_; }
    int m() const { return m_; }
    int name_bits() const { return 2 * n_; }
    std::uint64_t seed() const { return seed_; }

    Name start_name() const { return names_[0]; }  // f(0^n)

    // Counts every invocation; empty reply on invalid name or index.
    std::optional<Name> query(Name name, int index);

    // All m neighbors of a name in color order, counted as m invocations.
    // out must hold m entries; returns false (out untouched) for a bad name.
    bool query_all(Name name, Name* out);

    std::uint64_t query_count() const { return query_count_; }

    void set_recording(bool on);
    const std::vector<TranscriptEntry>& transcript() const { return transcript_; }

    // Truth access for verification and scoring only; search algorithms must
    // not touch these.
    Name true_antipode_name() const;
    std::optional<std::uint32_t> decode_name(Name name) const;

    // The quantum oracle as an explicit unitary: valid names in ascending
    // order, plus per-color index permutations of that list. Does not count
    // as classical queries.
    const std::vector<Name>& sorted_names() const { return sorted_names_; }
    std::vector<std::vector<std::uint32_t>> shift_tables() const;

private:
    int n_, s_, m_;
    std::uint64_t seed_;
    std::vector<std::uint32_t> elements_;
    std::vector<Name> names_;  // vertex -> name
    std::vector<Name> sorted_names_;
    std::vector<std::uint32_t> slots_;  // open addressing, vertex+1 (0 = empty)
    std::uint32_t slot_mask_ = 0;
    std::uint64_t query_count_ = 0;
    bool recording_ = false;
    std::vector<TranscriptEntry> transcript_;

    std::uint32_t lookup(Name name) const;  // vertex+1 or 0
};

struct SearchResult {
    std::optional<Name> answer;
    std::uint64_t queries;
    bool success;  // answer == f(v0 ^ 1^n), scored against the hidden truth
};

// The layer-climbing probabilistic search. Deterministic per (oracle, seed);
// returns some name even when the instance is unsolvable.
SearchResult classical_search(OracleGraph& oracle, Name start_name,
                              std::uint64_t seed);

struct QuantumSearchResult {
    std::vector<std::pair<Name, double>> distribution;  // ascending by name
    double success_probability;  // mass on the hidden antipode name
    long long steps;             // oracle-unitary applications
};

// Coined walk run directly on the valid-name subspace via the oracle's shift
// unitary; T steps, Grover coin.
QuantumSearchResult quantum_search(OracleGraph& oracle, Name start_name,
                                   long long T);

// Transcript wire format: one "hexname index hexreply" line per query, names
// zero-padded to ceil(2n/4) digits, empty reply encoded as "-".
std::string format_transcript(const OracleGraph& oracle);

struct ReplayResult {
    bool ok;
    std::size_t lines_checked;
    std::string first_mismatch;  // empty when ok
};

// Re-issues every recorded query against the oracle and compares replies.
ReplayResult replay_transcript(OracleGraph& oracle, std::istream& in);

}  // namespace qwalk
