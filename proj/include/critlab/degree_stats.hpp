#pragma once

// Neighborhood degree counts sigma_q and Woodall's p parameters.

#include <algorithm>
#include <cstdint>
#include <limits>

#include "exact_real.hpp"
#include "graph.hpp"

namespace critlab {

/// Whether a degree threshold q is met by d >= q or by d > q.
enum class threshold { at_least, greater_than };

inline bool meets(std::size_t d, const exact_real& q, threshold t = threshold::at_least)
{
    const auto cmp = exact_real(static_cast<long long>(d)) <=> q;
    return t == threshold::at_least ? cmp >= 0 : cmp > 0;
}

/// sigma_q(x, y): neighbors of y other than x whose degree meets q.
inline std::size_t sigma_q(const graph& g, vertex_id x, vertex_id y, const exact_real& q,
                           threshold t = threshold::at_least)
{
    if (!g.adjacent(x, y))
        throw precondition_error("sigma_q: x and y must be adjacent");
    std::size_t count = 0;
    for (const auto& i : g.incident(y))
        if (i.to != x && meets(g.degree(i.to), q, t))
            ++count;
    return count;
}

/// Integer-threshold fast path: |{z in N(y) - x : d(z) >= q}|.
inline std::size_t sigma_at_least(const graph& g, vertex_id x, vertex_id y, long long q)
{
    std::size_t count = 0;
    for (const auto& i : g.incident(y))
        if (i.to != x && static_cast<long long>(g.degree(i.to)) >= q)
            ++count;
    return count;
}

/// Woodall's threshold 2*Delta - d(x) - d(y) + 2.
inline long long woodall_q(const graph& g, vertex_id x, vertex_id y)
{
    const auto delta = static_cast<long long>(g.max_degree());
    return 2 * delta - static_cast<long long>(g.degree(x)) - static_cast<long long>(g.degree(y)) + 2;
}

/// sigma(x, y) = sigma_q(x, y) at Woodall's threshold.
inline std::size_t sigma(const graph& g, vertex_id x, vertex_id y)
{
    if (!g.adjacent(x, y))
        throw precondition_error("sigma: x and y must be adjacent");
    return sigma_at_least(g, x, y, woodall_q(g, x, y));
}

struct p_values {
    long long p_min;
    long long p;
};

/// p_min(x) = min over y of sigma(x,y) - Delta + d(x) - 1; p(x) caps it at floor(d(x)/2) - 1.
inline p_values p_params(const graph& g, vertex_id x)
{
    if (g.degree(x) == 0)
        throw precondition_error("p_params: x must have a neighbor");
    const auto delta = static_cast<long long>(g.max_degree());
    const auto dx = static_cast<long long>(g.degree(x));
    long long best = std::numeric_limits<long long>::max();
    for (const auto& i : g.incident(x))
        best = std::min(best, static_cast<long long>(sigma(g, x, i.to)));
    const long long p_min = best - delta + dx - 1;
    return {p_min, std::min(p_min, dx / 2 - 1)};
}

/// p_min(x, q) and p(x, q); the cap here is floor(d(x)/2) - 3.
inline p_values p_params_q(const graph& g, vertex_id x, const exact_real& q, threshold t = threshold::at_least)
{
    if (g.degree(x) == 0)
        throw precondition_error("p_params_q: x must have a neighbor");
    const auto delta = static_cast<long long>(g.max_degree());
    const auto dx = static_cast<long long>(g.degree(x));
    long long best = std::numeric_limits<long long>::max();
    for (const auto& i : g.incident(x))
        best = std::min(best, static_cast<long long>(sigma_q(g, x, i.to, q, t)));
    const long long p_min = best - delta + dx - 1;
    return {p_min, std::min(p_min, dx / 2 - 3)};
}

} // namespace critlab
