#include "kings/oracle.hpp"

namespace kings {

namespace {

std::size_t unordered_pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

CountingOracle::CountingOracle(const Tournament& t)
    : source_(&t), seen_(word_count(unordered_pair_count(t.size())), 0) {}

bool CountingOracle::query(VertexId u, VertexId v) {
    source_->check_pair(u, v);
    const VertexId lo = u < v ? u : v;
    const VertexId hi = u < v ? v : u;
    // index of (lo, hi) among pairs in lexicographic order
    const std::size_t idx =
        static_cast<std::size_t>(lo) * source_->size() -
        static_cast<std::size_t>(lo) * (lo + 1) / 2 + (hi - lo - 1);
    ++stats_.total;
    const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
    if (!(seen_[idx / 64] & bit)) {
        seen_[idx / 64] |= bit;
        ++stats_.distinct;
    }
    return source_->edge(u, v);
}

AdversaryOracle::AdversaryOracle(int n)
    : n_(n),
      known_(word_count(unordered_pair_count(n)), 0),
      fwd_(word_count(unordered_pair_count(n)), 0),
      outdeg_(n, 0) {
    if (n < 1) throw std::invalid_argument("adversary size must be >= 1");
}

std::size_t AdversaryOracle::pair_index(VertexId u, VertexId v) const {
    const VertexId lo = u < v ? u : v;
    const VertexId hi = u < v ? v : u;
    return static_cast<std::size_t>(lo) * n_ -
           static_cast<std::size_t>(lo) * (lo + 1) / 2 + (hi - lo - 1);
}

bool AdversaryOracle::known(std::size_t idx) const {
    return (known_[idx / 64] >> (idx % 64)) & 1u;
}

bool AdversaryOracle::forward(std::size_t idx) const {
    return (fwd_[idx / 64] >> (idx % 64)) & 1u;
}

bool AdversaryOracle::query(VertexId u, VertexId v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    if (u == v)
        throw std::invalid_argument("invalid query: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") is not an edge");
    const std::size_t idx = pair_index(u, v);
    ++stats_.total;
    if (!known(idx)) {
        ++stats_.distinct;
        known_[idx / 64] |= std::uint64_t{1} << (idx % 64);
        // larger out-degree loses the fresh edge; ties go u -> v
        VertexId winner = outdeg_[u] > outdeg_[v] ? v : u;
        ++outdeg_[winner];
        const VertexId lo = u < v ? u : v;
        if (winner == lo) fwd_[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    const VertexId lo = u < v ? u : v;
    return forward(idx) == (u == lo);
}

Tournament AdversaryOracle::complete() const {
    std::vector<int> outdeg = outdeg_;
    std::vector<std::uint64_t> fwd = fwd_;
    for (VertexId i = 0; i < n_; ++i) {
        for (VertexId j = i + 1; j < n_; ++j) {
            const std::size_t idx = pair_index(i, j);
            if (known(idx)) continue;
            VertexId winner = outdeg[i] > outdeg[j] ? j : i;
            ++outdeg[winner];
            if (winner == i) fwd[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
    }
    return Tournament::build(n_, [&](VertexId i, VertexId j) {
        const std::size_t idx = pair_index(i, j);
        return (fwd[idx / 64] >> (idx % 64)) & 1u;
    });
}

}  // namespace kings
