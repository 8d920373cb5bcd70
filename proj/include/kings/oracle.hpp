#ifndef KINGS_ORACLE_HPP_
#define KINGS_ORACLE_HPP_

#include <concepts>
#include <cstdint>
#include <vector>

#include "kings/tournament.hpp"

namespace kings {

struct QueryStats {
    std::uint64_t total = 0;
    std::uint64_t distinct = 0;
};

/// What a query-model algorithm needs from its input: a vertex count and an
/// edge probe. query(u, v) returns true iff the edge is oriented u -> v.
template <typename O>
concept EdgeOracle = requires(O& o, const O& co, VertexId u, VertexId v) {
    { co.size() } -> std::convertible_to<int>;
    { o.query(u, v) } -> std::convertible_to<bool>;
    { co.stats() } -> std::convertible_to<QueryStats>;
};

/// Uncounted pass-through to a tournament, for runs where probes are free.
class DirectOracle {
public:
    explicit DirectOracle(const Tournament& t) : source_(&t) {}
    int size() const { return source_->size(); }
    bool query(VertexId u, VertexId v) const { return source_->edge(u, v); }
    QueryStats stats() const { return {}; }

private:
    const Tournament* source_;
};

/// Edge-probe gateway that tallies queries. Decision-tree cost is the distinct
/// count; total additionally exposes wasteful re-queries.
class CountingOracle {
public:
    explicit CountingOracle(const Tournament& t);

    int size() const { return source_->size(); }
    bool query(VertexId u, VertexId v);
    QueryStats stats() const { return stats_; }

private:
    const Tournament* source_;
    QueryStats stats_;
    std::vector<std::uint64_t> seen_;  // one bit per unordered pair
};

/// Adaptive adversary: answers each fresh probe by directing the edge toward
/// the endpoint that currently has the larger committed out-degree (the
/// lower-degree vertex wins; ties give the win to the first-named vertex),
/// and replays committed answers forever after.
class AdversaryOracle {
public:
    explicit AdversaryOracle(int n);

    int size() const { return n_; }
    bool query(VertexId u, VertexId v);
    QueryStats stats() const { return stats_; }

    int committed_out_degree(VertexId v) const { return outdeg_[v]; }

    /// Fills every uncommitted pair by the same rule, in lexicographic pair
    /// order, and returns the resulting tournament. Committed answers are
    /// preserved; const, so it can be called mid-run to audit the algorithm.
    Tournament complete() const;

private:
    std::size_t pair_index(VertexId u, VertexId v) const;
    bool known(std::size_t idx) const;
    bool forward(std::size_t idx) const;  // min -> max

    int n_;
    std::vector<std::uint64_t> known_;
    std::vector<std::uint64_t> fwd_;
    std::vector<int> outdeg_;
    QueryStats stats_;
};

static_assert(EdgeOracle<DirectOracle>);
static_assert(EdgeOracle<CountingOracle>);
static_assert(EdgeOracle<AdversaryOracle>);

}  // namespace kings

#endif  // KINGS_ORACLE_HPP_
