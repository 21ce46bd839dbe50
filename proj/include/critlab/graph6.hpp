#pragma once

// graph6 text format: 6-bit groups biased by 63, upper triangle in column order.

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace critlab {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline std::uint32_t g6_value(std::string_view s, std::size_t at)
{
    if (at >= s.size())
        throw parse_error(at, "unexpected end of input");
    auto c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
        throw parse_error(at, "character out of range");
    return c - 63u;
}

} // namespace detail

inline graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (text.starts_with(header))
        pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    std::uint64_t n = 0;
    if (pos >= text.size())
        throw parse_error(pos, "empty graph6 line");
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
            for (std::size_t i = 0; i < 6; ++i)
                n = (n << 6) | detail::g6_value(text, pos + 2 + i);
            if (n <= 258047)
                throw parse_error(pos, "non-canonical 8-byte length prefix");
            pos += 8;
        } else {
            for (std::size_t i = 0; i < 3; ++i)
                n = (n << 6) | detail::g6_value(text, pos + 1 + i);
            if (n <= 62)
                throw parse_error(pos, "non-canonical 4-byte length prefix");
            pos += 4;
        }
    } else {
        n = detail::g6_value(text, pos);
        pos += 1;
    }
    if (n > 10'000'000)
        throw parse_error(pos, "graph too large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != bytes)
        throw parse_error(text.size() < pos + bytes ? text.size() : pos + bytes,
                          "expected " + std::to_string(bytes) + " data bytes, found " +
                              std::to_string(text.size() - pos));

    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::uint64_t k = 0;
    vertex_id i = 0, j = 1;
    for (std::size_t b = 0; b < bytes; ++b) {
        const auto val = detail::g6_value(text, pos + b);
        for (int s = 5; s >= 0; --s, ++k) {
            const bool bit = (val >> s) & 1u;
            if (k >= bits) {
                if (bit)
                    throw parse_error(pos + b, "nonzero padding bits");
                continue;
            }
            if (bit)
                edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return graph(static_cast<std::size_t>(n), edges);
}

inline std::string write_graph6(const graph& g)
{
    const std::uint64_t n = g.vertex_count();
    if (n > 68719476735ull)
        throw precondition_error("graph6: too many vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0, filled = 0;
    for (vertex_id j = 1; j < n; ++j)
        for (vertex_id i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// One entry per non-blank input line; malformed lines keep their error text.
struct graph6_record {
    std::size_t index;
    std::string text;
    std::optional<graph> g;
    std::string error;
};

inline std::vector<graph6_record> read_graph6_lines(std::istream& in)
{
    std::vector<graph6_record> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line == ">>graph6<<")
            continue;
        graph6_record r{out.size(), line, std::nullopt, {}};
        try {
            r.g = parse_graph6(line);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace critlab
