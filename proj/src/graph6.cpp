#include "p5lab/graph6.hpp"

#include "p5lab/errors.hpp"

namespace p5lab {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph from_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        text.remove_prefix(kHeader.size());
    }
    // strip one trailing newline so file lines parse as-is
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

    if (text.empty()) throw ParseError("empty graph6 line", base);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126)
        throw CapabilityError("graph6 long form (n > 62) not supported by this tool");
    if (c0 < 63 || c0 > 126) throw ParseError("invalid graph6 size character", base);
    int n = c0 - 63;

    std::size_t nbits = std::size_t(n) * (n - 1) / 2;
    std::size_t nchars = (nbits + 5) / 6;
    if (text.size() < 1 + nchars)
        throw ParseError("graph6 payload truncated: need " + std::to_string(nchars) +
                             " payload bytes, have " + std::to_string(text.size() - 1),
                         base + text.size());
    if (text.size() > 1 + nchars)
        throw ParseError("trailing bytes after graph6 payload", base + 1 + nchars);

    std::vector<Bitset> rows(n, Bitset(n));
    std::size_t bit = 0;
    for (std::size_t k = 0; k < nchars; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 payload character", base + 1 + k);
        int val = c - 63;
        for (int s = 5; s >= 0; --s, ++bit) {
            bool on = (val >> s) & 1;
            if (bit >= nbits) {
                if (on) throw ParseError("nonzero graph6 padding bit", base + 1 + k);
                continue;
            }
            if (on) {
                // upper-triangle column order: bit index -> (i, j), j > i
                std::size_t b = bit;
                int j = 1;
                while (b >= std::size_t(j)) {
                    b -= j;
                    ++j;
                }
                int i = int(b);
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
    int n = g.size();
    if (n > kGraph6MaxVertices)
        throw CapabilityError("graph6 short form caps at n <= 62, got n = " + std::to_string(n));
    std::string out;
    out += char(n + 63);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += char(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out += char((acc << (6 - nbits)) + 63);
    return out;
}

}  // namespace p5lab
