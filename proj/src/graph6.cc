#include "deza/graph6.hh"

#include "deza/errors.hh"

#include <vector>

namespace deza {

namespace {
    constexpr std::string_view kHeader = ">>graph6<<";
    constexpr int kBias = 63;
    constexpr unsigned char kLongForm = 126;

    void check_printable(std::string_view s, std::size_t i)
    {
        auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of range (value " + std::to_string(c) + ")", i);
    }
}

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(kHeader))
        pos = kHeader.size();

    std::size_t end = text.size();
    if (end > pos && text[end - 1] == '\n')
        --end;
    if (end > pos && text[end - 1] == '\r')
        --end;

    if (pos >= end)
        throw ParseError("empty graph6 string", pos);

    check_printable(text, pos);
    int n = 0;
    if (static_cast<unsigned char>(text[pos]) != kLongForm) {
        n = text[pos] - kBias;
        ++pos;
    }
    else {
        if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == kLongForm)
            throw ParseError("order exceeds the supported maximum of " + std::to_string(kGraph6MaxOrder), pos + 1);
        if (pos + 4 > end)
            throw ParseError("truncated graph6 length field", end);
        for (std::size_t i = pos + 1; i < pos + 4; ++i) {
            check_printable(text, i);
            n = (n << 6) | (text[i] - kBias);
        }
        if (n > kGraph6MaxOrder)
            throw ParseError("order " + std::to_string(n) + " exceeds the supported maximum of "
                + std::to_string(kGraph6MaxOrder), pos);
        pos += 4;
    }
    if (n < 1)
        throw ParseError("graph6 order must be at least 1", pos - 1);

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (end - pos < need)
        throw ParseError("graph6 string too short for order " + std::to_string(n), end);
    if (end - pos > need)
        throw ParseError("trailing bytes after graph6 data", pos + need);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            std::size_t at = pos + k / 6;
            if (k % 6 == 0)
                check_printable(text, at);
            int group = text[at] - kBias;
            if ((group >> (5 - k % 6)) & 1)
                edges.emplace_back(u, v);
        }
    for (std::size_t at = pos + k / 6 + (k % 6 ? 1 : 0); at < end; ++at)
        check_printable(text, at);
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g)
{
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw PreconditionError("order " + std::to_string(n) + " exceeds the graph6 cap of "
            + std::to_string(kGraph6MaxOrder));

    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + kBias));
    else {
        out.push_back(static_cast<char>(kLongForm));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }

    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

} // namespace deza
