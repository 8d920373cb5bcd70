#include "kings/tournament.hpp"

#include <bit>

namespace kings {

FormatError::FormatError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

int Tournament::out_degree(VertexId v) const {
    check_vertex(v);
    int deg = 0;
    for (std::uint64_t w : row(v)) deg += std::popcount(w);
    return deg;
}

std::vector<VertexId> Tournament::out_neighbors(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u)
        if (u != v && edge_bit(v, u)) out.push_back(u);
    return out;
}

std::vector<VertexId> Tournament::in_neighbors(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> in;
    for (VertexId u = 0; u < n_; ++u)
        if (u != v && edge_bit(u, v)) in.push_back(u);
    return in;
}

bool Tournament::reaches_within_two(VertexId u, VertexId v) const {
    check_pair(u, v);
    if (edge_bit(u, v)) return true;
    // A two-step witness is w with u -> w and w -> v. In a tournament
    // w -> v (w != v) is exactly !edge(v, w), so row_u & ~row_v does it:
    // bits u, v and the padding are all zero in row_u here.
    auto ru = row(u);
    auto rv = row(v);
    for (std::size_t i = 0; i < words_; ++i)
        if (ru[i] & ~rv[i]) return true;
    return false;
}

void Tournament::two_step_cover(VertexId i, std::vector<std::uint64_t>& cover) const {
    auto ri = row(i);
    cover.assign(ri.begin(), ri.end());
    for (VertexId w = 0; w < n_; ++w) {
        if (!edge_bit(i, w)) continue;
        auto rw = row(w);
        for (std::size_t k = 0; k < words_; ++k) cover[k] |= rw[k];
    }
}

bool Tournament::covers_all_but_self(const std::vector<std::uint64_t>& cover,
                                     VertexId self) const {
    for (std::size_t k = 0; k < words_; ++k) {
        std::uint64_t want = ~std::uint64_t{0};
        if (k == words_ - 1 && n_ % kWordBits != 0)
            want = (std::uint64_t{1} << (n_ % kWordBits)) - 1;
        std::uint64_t have = cover[k];
        if (static_cast<std::size_t>(self) / kWordBits == k)
            have |= std::uint64_t{1} << (self % kWordBits);
        if (have != want) return false;
    }
    return true;
}

bool Tournament::is_king(VertexId v) const {
    check_vertex(v);
    std::vector<std::uint64_t> cover;
    two_step_cover(v, cover);
    return covers_all_but_self(cover, v);
}

KingSet Tournament::all_kings() const {
    KingSet kings;
    std::vector<std::uint64_t> cover;
    for (VertexId i = 0; i < n_; ++i) {
        two_step_cover(i, cover);
        if (covers_all_but_self(cover, i)) kings.push_back(i);
    }
    return kings;
}

Tournament Tournament::flip_edge(VertexId u, VertexId v) const {
    check_pair(u, v);
    Tournament t(*this);
    if (t.edge_bit(u, v)) {
        t.clear_edge_bit(u, v);
        t.set_edge_bit(v, u);
    } else {
        t.clear_edge_bit(v, u);
        t.set_edge_bit(u, v);
    }
    assert(t.internally_consistent());
    return t;
}

bool Tournament::internally_consistent() const {
    for (VertexId i = 0; i < n_; ++i) {
        if (edge_bit(i, i)) return false;
        for (VertexId j = i + 1; j < n_; ++j)
            if (edge_bit(i, j) == edge_bit(j, i)) return false;
        // padding bits beyond column n must stay zero
        if (n_ % kWordBits != 0) {
            std::uint64_t pad = row(i)[words_ - 1] &
                                ~((std::uint64_t{1} << (n_ % kWordBits)) - 1);
            if (pad) return false;
        }
    }
    return true;
}

std::string serialize(const Tournament& t) {
    const int n = t.size();
    std::string out = "tournament v1\nn=" + std::to_string(n) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(n) * (n + 1));
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j)
            out.push_back(i != j && t.edge(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

// Splits on LF; a missing final LF is accepted on read (serialize always emits it).
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

int parse_count_line(const std::string& line, int lineno, const char* key) {
    const std::string prefix = std::string(key) + "=";
    if (line.rfind(prefix, 0) != 0)
        throw FormatError(lineno, 1, "expected '" + prefix + "<decimal>'");
    const std::string digits = line.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError(lineno, static_cast<int>(prefix.size()) + 1,
                          "expected a decimal count after '" + prefix + "'");
    long long value = 0;
    for (char c : digits) {
        value = value * 10 + (c - '0');
        if (value > 1'000'000)
            throw FormatError(lineno, static_cast<int>(prefix.size()) + 1,
                              "count too large");
    }
    return static_cast<int>(value);
}

}  // namespace

Tournament parse_tournament(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "tournament v1")
        throw FormatError(1, 1, "bad header: expected 'tournament v1'");
    if (lines.size() < 2)
        throw FormatError(2, 1, "missing 'n=<decimal>' line");
    const int n = parse_count_line(lines[1], 2, "n");
    if (n < 1) throw FormatError(2, 3, "n must be >= 1");

    if (lines.size() < static_cast<std::size_t>(n) + 2)
        throw FormatError(static_cast<int>(lines.size()) + 1, 1,
                          "expected " + std::to_string(n) + " rows, got " +
                              std::to_string(lines.size() - 2));
    if (lines.size() > static_cast<std::size_t>(n) + 2)
        throw FormatError(n + 3, 1, "trailing content after row " + std::to_string(n));

    std::vector<const std::string*> rows(n);
    for (int i = 0; i < n; ++i) {
        const std::string& row = lines[i + 2];
        const int lineno = i + 3;
        if (static_cast<int>(row.size()) != n)
            throw FormatError(lineno, static_cast<int>(row.size()) + 1,
                              "row has " + std::to_string(row.size()) +
                                  " characters, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (row[j] != '0' && row[j] != '1')
                throw FormatError(lineno, j + 1, "invalid character, expected 0 or 1");
            if (j == i && row[j] != '0')
                throw FormatError(lineno, j + 1, "diagonal entry must be 0");
        }
        rows[i] = &row;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((*rows[i])[j] == (*rows[j])[i])
                throw FormatError(j + 3, i + 1,
                                  "antisymmetry violated for pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) +
                                      "): exactly one direction must be 1");

    return Tournament::build(n, [&](VertexId i, VertexId j) {
        return (*rows[i])[j] == '1';
    });
}

}  // namespace kings
