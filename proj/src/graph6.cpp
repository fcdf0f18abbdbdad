#include "graph6.hpp"

#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ksat {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");

    unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == '~')
        throw ParseError("long-form graph6 vertex counts (n >= 63) are not supported");
    if (header < 63 || header > 63 + kGraph6MaxVertices)
        throw ParseError("graph6 header byte out of range");
    const int n = header - 63;
    if (n == 0) throw ParseError("graph6 null graph (n = 0) is not representable here");

    const long bits = pair_count(n);
    const long body = (bits + 5) / 6;
    if (static_cast<long>(text.size()) - 1 != body)
        throw ParseError("graph6 body length mismatch: expected " + std::to_string(body) +
                         " bytes for n = " + std::to_string(n) + ", got " +
                         std::to_string(text.size() - 1));

    Graph g(n);
    long p = 0;
    int i = 0, j = 1;  // walks the column-major pair order
    for (long byte = 0; byte < body; ++byte) {
        unsigned char c = static_cast<unsigned char>(text[byte + 1]);
        if (c < 63 || c > 126) throw ParseError("graph6 body byte out of range");
        int value = c - 63;
        for (int k = 5; k >= 0; --k, ++p) {
            bool set = (value >> k) & 1;
            if (p >= bits) {
                if (set) throw ParseError("graph6 padding bits must be zero");
                continue;
            }
            if (set) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("graph6 emission limited to 62 vertices, got " +
                                    std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int value = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

}  // namespace ksat
