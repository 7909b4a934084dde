#include <string>

#include "zagreb/graph.hpp"

namespace zagreb {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxExtendedOrder = 258047;

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

int decode_char(char c) {
    const int value = static_cast<unsigned char>(c) - 63;
    if (value < 0 || value > 63) {
        throw Error(ErrorCode::MalformedEncoding, "byte " + std::to_string(static_cast<unsigned char>(c)) +
                                                      " outside the printable graph6 range");
    }
    return value;
}

}  // namespace

Graph parse_g6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::MalformedEncoding, "empty input");
    if (text.front() == ':' || text.front() == '&') {
        throw Error(ErrorCode::MalformedEncoding, "sparse6/digraph6 input is not graph6");
    }

    int n = 0;
    std::size_t pos = 0;
    if (text.front() != '~') {
        n = decode_char(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            throw Error(ErrorCode::UnsupportedSize, "six-byte size field (n > 258047)");
        }
        if (text.size() < 4) throw Error(ErrorCode::MalformedEncoding, "truncated size field");
        n = (decode_char(text[1]) << 12) | (decode_char(text[2]) << 6) | decode_char(text[3]);
        if (n < 63) throw Error(ErrorCode::MalformedEncoding, "non-minimal size field");
        pos = 4;
    }
    if (n == 0) throw Error(ErrorCode::UnsupportedSize, "graph with no vertices");

    const std::size_t bits = bit_count(n);
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() - pos != chars) {
        throw Error(ErrorCode::MalformedEncoding, "expected " + std::to_string(chars) + " adjacency bytes for n=" +
                                                      std::to_string(n) + ", found " +
                                                      std::to_string(text.size() - pos));
    }

    EdgeList edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int group = decode_char(text[pos + k / 6]);
            if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    for (; k < chars * 6; ++k) {
        if ((decode_char(text[pos + k / 6]) >> (5 - k % 6)) & 1) {
            throw Error(ErrorCode::MalformedEncoding, "nonzero padding bits");
        }
    }
    return build(n, edges);
}

std::string emit_g6(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > kMaxExtendedOrder) {
        throw Error(ErrorCode::UnsupportedSize, "cannot encode a graph on " + std::to_string(n) + " vertices");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    const std::size_t bits = bit_count(n);
    std::string body((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - k % 6)));
        }
    }
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

}  // namespace zagreb
