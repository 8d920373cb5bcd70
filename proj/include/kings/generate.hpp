#ifndef KINGS_GENERATE_HPP_
#define KINGS_GENERATE_HPP_

#include <array>
#include <utility>
#include <vector>

#include "kings/rng.hpp"
#include "kings/tournament.hpp"

namespace kings {

/// Every generator here is a pure function of (parameters, seed): same inputs,
/// bitwise-identical tournament.

/// Each pair oriented by an independent fair coin.
Tournament random_tournament(int n, Seed seed);

/// i beats j iff i < j; vertex 0 is the unique king.
Tournament transitive_tournament(int n);

/// A tournament in which every vertex is a king. Exists only for sizes 1, 3
/// and >= 5: size 1 is trivial, size 3 is the directed triangle, larger sizes
/// are rejection-sampled (capped at 1000 attempts so misuse fails loudly).
Tournament all_kings_tournament(int m, Seed seed);

/// Three mutually-cyclic kings k1 -> k2 -> k3 -> k1 plus three size-m blocks
/// A, B, C whose every vertex is one edge flip away from kingship. Layout is
/// fixed: k1,k2,k3 = 0,1,2, then A, B, C contiguous.
struct HardInstance {
    Tournament t;
    std::array<VertexId, 3> kings;          // {k1, k2, k3}
    std::array<std::vector<VertexId>, 3> parts;  // {A, B, C}, each of size m

    const std::vector<VertexId>& part_a() const { return parts[0]; }
    const std::vector<VertexId>& part_b() const { return parts[1]; }
    const std::vector<VertexId>& part_c() const { return parts[2]; }
};

HardInstance hard_instance(int m, Seed seed);

/// One draw from the hard input distribution: the base instance with k-3
/// distinct donkeys promoted by single cross-edge flips (A donkeys flip
/// against a random C vertex, B against A, C against B).
struct DeltaSample {
    Tournament t;
    std::vector<VertexId> chosen;                        // the k-3 donkeys, draw order
    std::vector<std::pair<VertexId, VertexId>> flipped;  // (donkey, partner)
};

/// Requires 4 <= k <= 3m + 3; k = 3 is the plain hard instance, not a sample.
DeltaSample delta_sample(int m, int k, Seed seed);

}  // namespace kings

#endif  // KINGS_GENERATE_HPP_
