#pragma once

#include <gmpxx.h>

#include <vector>

// Layer (constant Hamming weight) structure of Cay(Z_2^n, {|e|=s}):
// inter-layer adjacency, exact per-vertex connection counts, the monotone
// neighbor-count invariant k(l), and common-neighbor layer ranges.

namespace qwalk {

// Layers adjacent to layer l: { t in [|l-s|, min(l+s, 2n-l-s)], t == |l-s| mod 2 }.
std::vector<int> layer_neighbors(int l, int n, int s);

bool layers_adjacent(int l, int t, int n, int s);

// Number of weight-t neighbors of any fixed weight-l vertex:
// C(l, (s+l-t)/2) * C(n-l, (s+t-l)/2). Throws for non-adjacent (l,t).
mpz_class connection_count(int l, int t, int n, int s);

struct KSequence {
    std::vector<mpz_class> values;  // k(0), k(2), ..., k(2(s-1))
    bool hypothesis_ok;             // 6s <= n
    bool strictly_decreasing;
};

// k(l) = C(l, l/2) C(n-l, s-l/2): neighbors of a weight-l vertex inside
// layer s. Strictly decreasing in l when 6s <= n; when the hypothesis fails
// the sequence is still returned with the flag cleared.
KSequence k_sequence(int n, int s);

// True when some v in L_l, q in L_t with v != q are joined by a 2-path,
// i.e. |v^q| is even, positive, and realizable as a sum of two generators.
bool reachable_pair(int l, int t, int n, int s);

// Layers containing a common neighbor of such a pair; equals
// layer_neighbors(l) intersect layer_neighbors(t). Throws std::domain_error
// when reachable_pair(l,t) fails.
std::vector<int> local_common_layers(int l, int t, int n, int s);

// The layer relations of one graph, bundled.
struct LayerRelation {
    int n;
    int s;

    std::vector<int> neighbors(int l) const { return layer_neighbors(l, n, s); }
    bool adjacent(int l, int t) const { return layers_adjacent(l, t, n, s); }
    mpz_class count(int l, int t) const { return connection_count(l, t, n, s); }
    KSequence k_seq() const { return k_sequence(n, s); }
    bool reachable(int l, int t) const { return reachable_pair(l, t, n, s); }
    std::vector<int> common(int l, int t) const {
        return local_common_layers(l, t, n, s);
    }
};

}  // namespace qwalk
