#include "rhomin/graph6.hpp"

#include <stdexcept>

namespace rhomin {

namespace {
constexpr int kBias = 63;

int need_byte(const std::string& s, size_t i) {
    if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - kBias;
}
}  // namespace

Graph parse_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw std::invalid_argument("graph6: 36-bit sizes unsupported");
        pos = 1;
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | need_byte(s, pos++);
        if (n < 63) throw std::invalid_argument("graph6: malformed length header");
    } else {
        n = need_byte(s, pos++);
    }
    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw std::invalid_argument("graph6: wrong body length");

    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    for (size_t k = 0; k < nbytes; ++k) {
        int val = need_byte(s, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (val >> b) & 1;
            if (bit >= nbits) {
                if (on) throw std::invalid_argument("graph6: trailing bits nonzero");
                continue;
            }
            if (on) {
                // Invert column-major position -> (i, j): find j with
                // C(j,2) <= bit < C(j+1,2).
                long long j = 1;
                while (j * (j + 1) / 2 <= bit) ++j;
                long long i = bit - j * (j - 1) / 2;
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return build_graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
    long long n = g.num_vertices();
    if (n > 258047) throw std::invalid_argument("graph6: n too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kBias));
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        out.push_back(parse_graph6(text.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

}  // namespace rhomin
