#include "dissoc/graph6.hpp"

#include <istream>
#include <ostream>

#include "dissoc/error.hpp"

namespace dissoc {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63));
        out.push_back(static_cast<char>(63));
        out.push_back(static_cast<char>(63 + n));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) throw MalformedInput("graph6: empty input");

    for (char c : text) {
        if (c < 63 || c > 126) {
            throw MalformedInput("graph6: byte " + std::to_string(static_cast<int>(c)) +
                                 " outside 63..126");
        }
    }

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') {
            throw MalformedInput("graph6: orders above 64 are not supported");
        }
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
        pos = 4;
    }
    if (n < 1 || n > Graph::kMaxOrder) {
        throw MalformedInput("graph6: order " + std::to_string(n) + " outside 1..64");
    }

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw MalformedInput("graph6: expected " + std::to_string(expected) +
                             " data bytes for order " + std::to_string(n) + ", got " +
                             std::to_string(text.size() - pos));
    }

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int byte = text[pos + k / 6] - 63;
        if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) {
            throw MalformedInput("graph6: nonzero padding bits");
        }
    }
    return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace dissoc
