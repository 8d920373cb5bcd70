#ifndef KINGS_TOURNAMENT_HPP_
#define KINGS_TOURNAMENT_HPP_

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kings {

using VertexId = int;

/// Kings of a tournament, ascending vertex ids unless stated otherwise.
using KingSet = std::vector<VertexId>;

/// Parse failure with 1-based line/column of the offending input.
class FormatError : public std::runtime_error {
public:
    FormatError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Complete orientation on n vertices. Rows are bit-packed (64 bits per word,
/// bit j of row i set iff i beats j), immutable after construction. The
/// diagonal is stored as 0 and never consulted.
class Tournament {
public:
    static constexpr int kWordBits = 64;

    /// Builds from an orientation callback: beats_ij(i, j) is invoked once for
    /// every pair i < j in row-major order (the order matters for seeded
    /// generators) and returns true iff i beats j.
    template <typename F>
    static Tournament build(int n, F&& beats_ij) {
        if (n < 1) throw std::invalid_argument("tournament size must be >= 1");
        Tournament t(n);
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j) {
                if (beats_ij(i, j))
                    t.set_edge_bit(i, j);
                else
                    t.set_edge_bit(j, i);
            }
        assert(t.internally_consistent());
        return t;
    }

    int size() const { return n_; }

    /// True iff the edge is oriented u -> v. This is the single edge probe every
    /// oracle and algorithm ultimately lands on.
    bool edge(VertexId u, VertexId v) const {
        check_pair(u, v);
        return edge_bit(u, v);
    }

    int out_degree(VertexId v) const;
    std::vector<VertexId> out_neighbors(VertexId v) const;
    std::vector<VertexId> in_neighbors(VertexId v) const;

    /// True iff u reaches v by a path of length <= 2.
    bool reaches_within_two(VertexId u, VertexId v) const;

    /// True iff v reaches every other vertex within two steps. O(n^2 / 64).
    bool is_king(VertexId v) const;

    /// All kings via the boolean criterion M | M*M: vertex i is a king iff every
    /// off-diagonal entry of row i of (M or M^2) is 1. The direct-edge term is
    /// needed because a length-1 hop has no length-2 witness (visible at n = 2).
    KingSet all_kings() const;

    /// Copy with the {u, v} pair reversed; *this is unchanged.
    Tournament flip_edge(VertexId u, VertexId v) const;

    std::span<const std::uint64_t> row(VertexId v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    /// Antisymmetry + completeness over all pairs, diagonal and padding zero.
    bool internally_consistent() const;

    bool operator==(const Tournament& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }

    void check_pair(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("invalid query: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") is not an edge");
    }

private:
    explicit Tournament(int n)
        : n_(n),
          words_((static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits),
          bits_(static_cast<std::size_t>(n) * words_, 0) {}

    bool edge_bit(VertexId u, VertexId v) const {
        return (word_at(u, v) >> (v % kWordBits)) & 1u;
    }
    std::uint64_t word_at(VertexId u, VertexId v) const {
        return bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits];
    }
    void set_edge_bit(VertexId u, VertexId v) {
        bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |=
            std::uint64_t{1} << (v % kWordBits);
    }
    void clear_edge_bit(VertexId u, VertexId v) {
        bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] &=
            ~(std::uint64_t{1} << (v % kWordBits));
    }

    // Row of the boolean square plus the direct edges: bit j set iff i reaches j
    // within two steps.
    void two_step_cover(VertexId i, std::vector<std::uint64_t>& cover) const;
    bool covers_all_but_self(const std::vector<std::uint64_t>& cover, VertexId self) const;

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Bit-exact text form: "tournament v1", "n=<decimal>", then n rows of n chars
/// from {0,1}, LF line endings.
std::string serialize(const Tournament& t);

/// Inverse of serialize. Validates the header, shape, charset, zero diagonal,
/// and antisymmetry, reporting 1-based line/column on failure.
Tournament parse_tournament(const std::string& text);

}  // namespace kings

#endif  // KINGS_TOURNAMENT_HPP_
