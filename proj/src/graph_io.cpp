#include "sqbound/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sqbound/error.hpp"

namespace sqbound {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int graph6_value(char c) {
    const int value = static_cast<unsigned char>(c) - 63;
    if (value < 0 || value > 63) throw ParseError(std::string("invalid graph6 character '") + c + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

long long parse_int(std::string_view token, std::string_view what) {
    long long value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

std::string to_string(GraphFormat format) {
    return format == GraphFormat::graph6 ? "graph6" : "edgelist";
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    long long n = 0;
    auto read_bytes = [&](int count) {
        if (pos + static_cast<std::size_t>(count) > text.size()) throw ParseError("truncated graph6 header");
        long long value = 0;
        for (int i = 0; i < count; ++i) value = (value << 6) | graph6_value(text[pos++]);
        return value;
    };
    if (text[0] != '~') {
        n = read_bytes(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = read_bytes(3);
    } else {
        pos = 2;
        n = read_bytes(6);
    }
    if (n > 1'000'000) throw ParseError("graph6 vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const long long expected = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != expected) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(expected));
    }

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = graph6_value(text[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), std::span<const Edge>(edges));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    auto put_bytes = [&](long long value, int count) {
        for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        put_bytes(n, 1);
    } else if (n <= 258047) {
        out.push_back('~');
        put_bytes(n, 3);
    } else {
        out += "~~";
        put_bytes(n, 6);
    }

    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        std::istringstream fields{std::string(trim(body))};
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;

        const std::string where = "line " + std::to_string(line_no);
        if (n < 0) {
            if (tokens.size() != 1) throw ParseError(where + ": expected vertex count");
            n = parse_int(tokens[0], "vertex count");
            if (n < 0 || n > 1'000'000) throw ParseError(where + ": vertex count out of range");
            continue;
        }
        if (tokens.size() != 2) throw ParseError(where + ": expected 'u v'");
        const long long u = parse_int(tokens[0], "vertex");
        const long long v = parse_int(tokens[1], "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(where + ": vertex out of range");
        if (u == v) throw ParseError(where + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list has no vertex count");
    return Graph(static_cast<int>(n), std::span<const Edge>(edges));
}

std::string to_edgelist(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edgelist(g);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::ios_base::failure("error reading '" + path.string() + "'");
    std::string text = buffer.str();
    if (format == GraphFormat::graph6) {
        // First non-empty line only; nauty tools write one graph per line.
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (!trim(line).empty()) return parse_graph6(line);
        }
        throw ParseError("empty graph6 file");
    }
    return parse_edgelist(text);
}

}  // namespace sqbound
