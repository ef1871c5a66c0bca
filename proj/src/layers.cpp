#include "qwalk/layers.hpp"

#include <algorithm>
#include <stdexcept>

#include "qwalk/combinatorics.hpp"

namespace qwalk {

namespace {

void check_layer_args(int l, int n, int s) {
    if (n < 2 || s < 1 || s >= n)
        throw std::invalid_argument("layers: need 1 <= s < n");
    if (l < 0 || l > n) throw std::invalid_argument("layers: layer out of range");
}

}  // namespace

std::vector<int> layer_neighbors(int l, int n, int s) {
    check_layer_args(l, n, s);
    const int lo = std::abs(l - s);
    const int hi = std::min(l + s, 2 * n - l - s);
    std::vector<int> out;
    for (int t = lo; t <= hi; t += 2) out.push_back(t);
    return out;
}

bool layers_adjacent(int l, int t, int n, int s) {
    check_layer_args(l, n, s);
    if (t < 0 || t > n) return false;
    const int lo = std::abs(l - s);
    const int hi = std::min(l + s, 2 * n - l - s);
    return t >= lo && t <= hi && (t - lo) % 2 == 0;
}

mpz_class connection_count(int l, int t, int n, int s) {
    if (!layers_adjacent(l, t, n, s))
        throw std::domain_error("connection_count: layers not adjacent");
    const int p = (s + l - t) / 2;  // overlap |e ^ v| forced by the weights
    return binom(l, p) * binom(n - l, s - p);
}

KSequence k_sequence(int n, int s) {
    check_layer_args(0, n, s);
    KSequence seq;
    seq.hypothesis_ok = (6 * s <= n);
    for (int l = 0; l <= 2 * (s - 1); l += 2)
        seq.values.push_back(binom(l, l / 2) * binom(n - l, s - l / 2));
    seq.strictly_decreasing = true;
    for (std::size_t i = 1; i < seq.values.size(); ++i)
        if (seq.values[i] >= seq.values[i - 1]) seq.strictly_decreasing = false;
    return seq;
}

bool reachable_pair(int l, int t, int n, int s) {
    check_layer_args(l, n, s);
    if (t < 0 || t > n) return false;
    if ((l - t) % 2 != 0) return false;
    // b = |v^q| must be even, positive, expressible as e1^e2 (any even weight
    // up to min(2s, 2n-2s)), and realizable between the two layers.
    const int blo = std::max(2, std::abs(l - t));  // even: l == t (mod 2)
    const int bhi = std::min({2 * s, 2 * n - 2 * s, l + t, 2 * n - l - t});
    return blo <= bhi;
}

std::vector<int> local_common_layers(int l, int t, int n, int s) {
    if (!reachable_pair(l, t, n, s))
        throw std::domain_error("local_common_layers: no 2-path pair in these layers");
    // l == t (mod 2) here, so both endpoints share the parity of |l-s|.
    const int lo = std::max(std::abs(l - s), std::abs(t - s));
    const int hi = std::min(std::min(l + s, 2 * n - l - s),
                            std::min(t + s, 2 * n - t - s));
    std::vector<int> out;
    for (int x = lo; x <= hi; x += 2) out.push_back(x);
    return out;
}

}  // namespace qwalk
