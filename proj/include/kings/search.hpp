#ifndef KINGS_SEARCH_HPP_
#define KINGS_SEARCH_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "kings/oracle.hpp"
#include "kings/rng.hpp"
#include "kings/tournament.hpp"

namespace kings {

enum class Certificate {
    none,
    unique_king,   // the returned king beats everyone, so no other king exists
    found_k,       // k kings delivered
    fewer_than_k,  // the graph has fewer than k kings; all of them are returned
};

const char* certificate_name(Certificate c);  // "unique-king" etc., "" for none

struct SearchResult {
    KingSet kings;  // discovery order
    QueryStats stats;
    Certificate certificate = Certificate::none;
    // live-set size at the start of each elimination round (randomized and
    // deterministic single finders only); strictly decreasing by construction
    std::vector<int> live_sizes;
};

/// Induced sub-tournament as a view: the base plus the surviving vertex ids.
/// Orientation is inherited, nothing is copied.
struct SubgraphView {
    const Tournament* base;
    std::vector<VertexId> live;
};

enum class SingleFinder { randomized, deterministic };

namespace detail {

// Pivot elimination on a live array, partitioned in place as in quicksort:
// pick a pivot, keep exactly its in-neighbors, repeat. Every survivor set is
// an induced sub-tournament, so its kings are kings of the whole graph.
template <EdgeOracle O>
VertexId find_king_randomized_live(O& oracle, std::vector<VertexId>& live, Rng& rng,
                                   std::vector<int>* sizes) {
    while (true) {
        if (sizes) sizes->push_back(static_cast<int>(live.size()));
        if (live.size() == 1) return live[0];
        const std::size_t pick = rng.below(live.size());
        const VertexId pivot = live[pick];
        std::swap(live[pick], live.back());
        live.pop_back();
        std::size_t keep = 0;
        for (std::size_t i = 0; i < live.size(); ++i)
            if (!oracle.query(pivot, live[i])) std::swap(live[keep++], live[i]);
        if (keep == 0) return pivot;
        live.resize(keep);
    }
}

// One king by repeated sampling: probe all pairs inside a ceil(2*sqrt(N))
// prefix of the live set, pivot on its max-out-degree vertex, recurse on the
// pivot's in-neighborhood. Sub-sample of 4 or fewer is solved outright by
// max out-degree. Ties always break toward the lowest vertex id.
template <EdgeOracle O>
VertexId find_king_deterministic_live(O& oracle, std::vector<VertexId>& live,
                                      std::vector<int>* sizes) {
    while (true) {
        if (sizes) sizes->push_back(static_cast<int>(live.size()));
        const std::size_t n_live = live.size();
        if (n_live == 1) return live[0];

        const std::size_t sample =
            n_live <= 4
                ? n_live
                : std::min(n_live, static_cast<std::size_t>(
                                       std::ceil(2.0 * std::sqrt(double(n_live)))));
        std::vector<char> beats(sample * sample, 0);
        std::vector<int> outdeg(sample, 0);
        for (std::size_t i = 0; i < sample; ++i)
            for (std::size_t j = i + 1; j < sample; ++j) {
                const bool ij = oracle.query(live[i], live[j]);
                beats[i * sample + j] = ij;
                beats[j * sample + i] = !ij;
                ++outdeg[ij ? i : j];
            }
        std::size_t best = 0;
        for (std::size_t i = 1; i < sample; ++i) {
            if (outdeg[i] > outdeg[best] ||
                (outdeg[i] == outdeg[best] && live[i] < live[best]))
                best = i;
        }
        const VertexId pivot = live[best];
        if (n_live <= 4) return pivot;

        std::vector<VertexId> next;
        for (std::size_t i = 0; i < sample; ++i)
            if (i != best && beats[i * sample + best]) next.push_back(live[i]);
        for (std::size_t i = sample; i < n_live; ++i)
            if (!oracle.query(pivot, live[i])) next.push_back(live[i]);
        if (next.empty()) return pivot;
        live = std::move(next);
    }
}

template <EdgeOracle O>
VertexId run_single_finder(O& oracle, std::vector<VertexId>& live, SingleFinder f,
                           Rng* rng, std::vector<int>* sizes) {
    if (f == SingleFinder::randomized) {
        if (!rng)
            throw std::invalid_argument("randomized single finder requires an rng");
        return find_king_randomized_live(oracle, live, *rng, sizes);
    }
    return find_king_deterministic_live(oracle, live, sizes);
}

inline std::vector<VertexId> all_vertices(int n) {
    std::vector<VertexId> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace detail

/// Zero-error randomized king finder; 2n probes in expectation.
template <EdgeOracle O>
SearchResult find_king_randomized(O& oracle, Rng& rng) {
    SearchResult r;
    auto live = detail::all_vertices(oracle.size());
    r.kings.push_back(detail::find_king_randomized_live(oracle, live, rng, &r.live_sizes));
    r.stats = oracle.stats();
    return r;
}

/// Probes every pair and returns the max-out-degree vertex (lowest id on
/// ties), which is always a king.
template <EdgeOracle O>
SearchResult find_king_max_outdegree(O& oracle) {
    const int n = oracle.size();
    std::vector<int> outdeg(n, 0);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            if (oracle.query(i, j))
                ++outdeg[i];
            else
                ++outdeg[j];
        }
    VertexId best = 0;
    for (VertexId v = 1; v < n; ++v)
        if (outdeg[v] > outdeg[best]) best = v;
    SearchResult r;
    r.kings.push_back(best);
    r.stats = oracle.stats();
    return r;
}

/// Deterministic king finder with O(n^(3/2)) probes.
template <EdgeOracle O>
SearchResult find_king_deterministic(O& oracle) {
    SearchResult r;
    auto live = detail::all_vertices(oracle.size());
    r.kings.push_back(
        detail::find_king_deterministic_live(oracle, live, &r.live_sizes));
    r.stats = oracle.stats();
    return r;
}

/// One king, or three: find k1, pivot into its in-neighborhood for k2, then
/// into k2's in-neighborhood for k3. If nobody beats k1 it is the only king
/// (certificate unique_king); otherwise all three are distinct kings. Costs
/// at most three single-finder runs plus 2n probes.
template <EdgeOracle O>
SearchResult find_up_to_three_kings(O& oracle, SingleFinder finder,
                                    Rng* rng = nullptr) {
    const int n = oracle.size();
    SearchResult r;

    auto live = detail::all_vertices(n);
    const VertexId k1 = detail::run_single_finder(oracle, live, finder, rng, nullptr);
    r.kings.push_back(k1);

    std::vector<VertexId> beat_k1;
    for (VertexId v = 0; v < n; ++v)
        if (v != k1 && oracle.query(v, k1)) beat_k1.push_back(v);
    if (beat_k1.empty()) {
        r.certificate = Certificate::unique_king;
        r.stats = oracle.stats();
        return r;
    }

    const VertexId k2 = detail::run_single_finder(oracle, beat_k1, finder, rng, nullptr);
    r.kings.push_back(k2);

    // k2 beats k1, so k1 is not in here and the third king is genuinely new;
    // nonempty, else k2 would beat everyone and k1 could not be a king.
    std::vector<VertexId> beat_k2;
    for (VertexId v = 0; v < n; ++v)
        if (v != k2 && oracle.query(v, k2)) beat_k2.push_back(v);
    const VertexId k3 = detail::run_single_finder(oracle, beat_k2, finder, rng, nullptr);
    r.kings.push_back(k3);

    r.certificate = Certificate::found_k;
    r.stats = oracle.stats();
    return r;
}

/// k kings in O(k n^2): keep a candidate set of vertices within distance two
/// of every king found so far, repeatedly extract a king of the candidate
/// sub-tournament (it is a king of the whole graph), and re-filter. Kings are
/// never evicted, so an empty candidate set proves all kings were found.
SearchResult find_k_kings_quadratic(const Tournament& t, int k,
                                    SingleFinder finder = SingleFinder::deterministic,
                                    Rng* rng = nullptr);

/// k kings via the boolean square M | M*M: lowest-index kings first.
SearchResult find_k_kings_matmul(const Tournament& t, int k);

}  // namespace kings

#endif  // KINGS_SEARCH_HPP_
