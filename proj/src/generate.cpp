#include "kings/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kings {

Tournament random_tournament(int n, Seed seed) {
    if (n < 1) throw std::invalid_argument("random_tournament: n must be >= 1");
    Rng rng(seed);
    return Tournament::build(n, [&](VertexId, VertexId) { return rng.coin(); });
}

Tournament transitive_tournament(int n) {
    if (n < 1) throw std::invalid_argument("transitive_tournament: n must be >= 1");
    return Tournament::build(n, [](VertexId, VertexId) { return true; });
}

Tournament all_kings_tournament(int m, Seed seed) {
    switch (m) {
        case 0:
            throw std::invalid_argument(
                "all_kings_tournament: m=0 is empty, no tournament exists");
        case 2:
            throw std::invalid_argument(
                "all_kings_tournament: m=2 is impossible, the loser of the single "
                "game cannot reach the winner");
        case 4:
            throw std::invalid_argument(
                "all_kings_tournament: m=4 is impossible, no 4-vertex tournament "
                "has four kings");
        default:
            break;
    }
    if (m < 0) throw std::invalid_argument("all_kings_tournament: m must be >= 1");
    if (m == 1) return Tournament::build(1, [](VertexId, VertexId) { return true; });
    if (m == 3)
        // the directed triangle 0 -> 1 -> 2 -> 0
        return Tournament::build(3, [](VertexId i, VertexId j) {
            return !(i == 0 && j == 2);
        });

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Tournament t = random_tournament(m, derive_seed(seed, attempt));
        if (static_cast<int>(t.all_kings().size()) == m) return t;
    }
    throw std::runtime_error(
        "all_kings_tournament: no all-kings tournament on " + std::to_string(m) +
        " vertices found within 1000 sampling attempts");
}

namespace {

void check_block_size(int m) {
    if (m == 0 || m == 2 || m == 4 || m < 0)
        throw std::invalid_argument(
            "hard_instance: block size m=" + std::to_string(m) +
            " is unsupported, all-kings blocks exist only for sizes 1, 3 and >= 5");
}

}  // namespace

HardInstance hard_instance(int m, Seed seed) {
    check_block_size(m);
    const Tournament sub_a = all_kings_tournament(m, derive_seed(seed, 1));
    const Tournament sub_b = all_kings_tournament(m, derive_seed(seed, 2));
    const Tournament sub_c = all_kings_tournament(m, derive_seed(seed, 3));

    const int n = 3 * m + 3;
    // vertex layout: k1=0, k2=1, k3=2, A=[3,3+m), B=[3+m,3+2m), C=[3+2m,3+3m)
    const auto part_of = [m](VertexId v) { return v < 3 ? -1 : (v - 3) / m; };
    const auto local = [m](VertexId v) { return (v - 3) % m; };
    const std::array<const Tournament*, 3> subs = {&sub_a, &sub_b, &sub_c};

    const auto beats = [&](VertexId u, VertexId v) -> bool {
        const int pu = part_of(u), pv = part_of(v);
        // king cycle k1 -> k2 -> k3 -> k1
        if (pu < 0 && pv < 0) return (u + 1) % 3 == v;
        // each block beats exactly its own king and loses to the other two
        if (pu < 0) return u != pv;
        if (pv < 0) return v == pu;
        if (pu == pv) return subs[pu]->edge(local(u), local(v));
        // blocks chase in a cycle: A -> B -> C -> A
        return (pu + 1) % 3 == pv;
    };

    HardInstance inst{
        Tournament::build(n, [&](VertexId i, VertexId j) { return beats(i, j); }),
        {0, 1, 2},
        {}};
    for (int p = 0; p < 3; ++p) {
        inst.parts[p].resize(m);
        std::iota(inst.parts[p].begin(), inst.parts[p].end(), 3 + p * m);
    }
    return inst;
}

DeltaSample delta_sample(int m, int k, Seed seed) {
    check_block_size(m);
    const int n = 3 * m + 3;
    if (k < 4 || k > n)
        throw std::invalid_argument(
            "delta_sample: k=" + std::to_string(k) + " out of range [4, " +
            std::to_string(n) + "]");

    HardInstance base = hard_instance(m, derive_seed(seed, 0));
    Rng rng(derive_seed(seed, 1));

    // k-3 distinct donkeys, uniform over A+B+C (never the three kings)
    std::vector<VertexId> pool(3 * m);
    std::iota(pool.begin(), pool.end(), 3);
    DeltaSample sample{std::move(base.t), {}, {}};
    for (int i = 0; i < k - 3; ++i) {
        const std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        sample.chosen.push_back(pool[i]);
    }

    for (VertexId donkey : sample.chosen) {
        const int part = (donkey - 3) / m;
        // A donkeys flip toward C, B toward A, C toward B
        const int target_part = (part + 2) % 3;
        const VertexId partner =
            3 + target_part * m + static_cast<VertexId>(rng.below(m));
        sample.t = sample.t.flip_edge(donkey, partner);
        sample.flipped.emplace_back(donkey, partner);
    }
    return sample;
}

}  // namespace kings
