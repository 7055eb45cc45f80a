#include "pfactor/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace pfactor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int data_value(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw FormatError("graph6: byte outside 63..126");
    return v;
}

std::size_t read_order(std::string_view& text) {
    if (text.empty()) throw FormatError("graph6: missing order byte");
    if (text[0] != '~') {
        std::size_t n = static_cast<std::size_t>(data_value(text[0]));
        text.remove_prefix(1);
        return n;
    }
    // '~' + 3 bytes (18 bits), or "~~" + 6 bytes (36 bits).
    std::size_t width = 3;
    std::size_t skip = 1;
    if (text.size() >= 2 && text[1] == '~') {
        width = 6;
        skip = 2;
    }
    if (text.size() < skip + width) throw FormatError("graph6: truncated extended order");
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(data_value(text[skip + i]));
    text.remove_prefix(skip + width);
    return static_cast<std::size_t>(n);
}

void write_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    std::size_t width = 3;
    if (n <= 258047) {
        out.push_back('~');
    } else {
        out.append("~~");
        width = 6;
    }
    for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
}

std::size_t parse_index(std::string_view token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw FormatError("edge list: expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    const std::size_t n = read_order(text);
    if (n > kMaxVertices) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds the vertex cap");

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() < bytes) throw FormatError("graph6: truncated adjacency data");
    if (text.size() > bytes) throw FormatError("graph6: trailing bytes after adjacency data");

    Graph::Builder builder(n);
    std::size_t bit = 0;
    std::size_t i = 0;
    std::size_t j = 1;
    for (std::size_t k = 0; k < bytes; ++k) {
        const int value = data_value(text[k]);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1;
            if (bit >= bits) {
                if (set) throw FormatError("graph6: padding bit set beyond the upper triangle");
                continue;
            }
            if (set) builder.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return builder.build();
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    write_order(out, n);
    int value = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::vector<std::string_view>> rows;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
            std::size_t end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
            if (end > pos) tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        if (tokens.size() != 2) throw FormatError("edge list: each line must hold exactly two integers");
        rows.push_back(std::move(tokens));
    }
    if (rows.empty()) throw FormatError("edge list: missing 'n m' header");
    const std::size_t n = parse_index(rows[0][0]);
    const std::size_t m = parse_index(rows[0][1]);
    check_capacity(n);
    if (rows.size() - 1 != m)
        throw FormatError("edge list: header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(rows.size() - 1));
    Graph::Builder builder(n);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t u = parse_index(rows[r][0]);
        const std::size_t v = parse_index(rows[r][1]);
        if (u >= n || v >= n) throw FormatError("edge list: vertex index out of range");
        if (u == v) throw FormatError("edge list: loop at vertex " + std::to_string(u));
        if (builder.has_edge(u, v)) throw FormatError("edge list: duplicate edge");
        builder.add_edge(u, v);
    }
    return builder.build();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const EdgeSet edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace pfactor
