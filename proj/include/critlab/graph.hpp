#pragma once

// Simple undirected graphs with stable vertex and edge identifiers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critlab {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;

inline constexpr edge_id no_edge = std::numeric_limits<edge_id>::max();

/// Thrown when an operation's documented precondition does not hold.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct edge_ends {
    vertex_id u;
    vertex_id v;

    vertex_id other(vertex_id w) const { return w == u ? v : u; }
    friend bool operator==(const edge_ends&, const edge_ends&) = default;
};

struct incidence {
    vertex_id to;
    edge_id edge;
};

/// Immutable simple graph on vertices 0..n-1.
///
/// Edge ids are assigned in insertion order and are never reused: deleting an
/// edge leaves a dead slot behind so every surviving edge keeps its id. All
/// per-vertex incidence lists are sorted by neighbor id, which makes every
/// iteration deterministic.
class graph {
public:
    graph() = default;

    explicit graph(std::size_t n) : adj_(n) {}

    graph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edges) : adj_(n)
    {
        ends_.reserve(edges.size());
        for (auto [u, v] : edges)
            append_edge(u, v);
        sort_incidence();
    }

    graph(std::size_t n, std::initializer_list<std::pair<vertex_id, vertex_id>> edges)
        : graph(n, std::span<const std::pair<vertex_id, vertex_id>>(edges.begin(), edges.size()))
    {
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return live_edges_; }

    /// One past the largest edge id ever issued; size of per-edge tables.
    std::size_t edge_capacity() const { return ends_.size(); }

    bool has_edge_id(edge_id e) const { return e < ends_.size() && alive_[e]; }

    const edge_ends& ends(edge_id e) const
    {
        if (!has_edge_id(e))
            throw precondition_error("unknown edge id " + std::to_string(e));
        return ends_[e];
    }

    std::span<const incidence> incident(vertex_id v) const { return adj_.at(v); }

    std::size_t degree(vertex_id v) const { return adj_.at(v).size(); }

    std::size_t max_degree() const { return max_degree_; }

    std::size_t min_degree() const
    {
        if (adj_.empty())
            return 0;
        std::size_t d = std::numeric_limits<std::size_t>::max();
        for (const auto& a : adj_)
            d = std::min(d, a.size());
        return d;
    }

    std::vector<vertex_id> neighbors(vertex_id v) const
    {
        std::vector<vertex_id> out;
        out.reserve(degree(v));
        for (const auto& i : adj_.at(v))
            out.push_back(i.to);
        return out;
    }

    std::optional<edge_id> edge_between(vertex_id u, vertex_id v) const
    {
        const auto& a = adj_.at(u);
        auto it = std::lower_bound(a.begin(), a.end(), v,
                                   [](const incidence& i, vertex_id w) { return i.to < w; });
        if (it != a.end() && it->to == v)
            return it->edge;
        return std::nullopt;
    }

    bool adjacent(vertex_id u, vertex_id v) const { return edge_between(u, v).has_value(); }

    /// Live edge ids in ascending order.
    std::vector<edge_id> edges() const
    {
        std::vector<edge_id> out;
        out.reserve(live_edges_);
        for (edge_id e = 0; e < ends_.size(); ++e)
            if (alive_[e])
                out.push_back(e);
        return out;
    }

    std::vector<std::size_t> degree_sequence() const
    {
        std::vector<std::size_t> out;
        out.reserve(adj_.size());
        for (const auto& a : adj_)
            out.push_back(a.size());
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    /// G - e. Every other edge keeps its id.
    graph without_edge(edge_id e) const
    {
        if (!has_edge_id(e))
            throw precondition_error("delete_edge: unknown edge id " + std::to_string(e));
        graph h = *this;
        auto [u, v] = ends_[e];
        auto drop = [e](std::vector<incidence>& a) {
            a.erase(std::find_if(a.begin(), a.end(), [e](const incidence& i) { return i.edge == e; }));
        };
        drop(h.adj_[u]);
        drop(h.adj_[v]);
        h.alive_[e] = false;
        --h.live_edges_;
        h.update_max_degree();
        return h;
    }

    /// G + uv with a fresh edge id.
    graph with_edge(vertex_id u, vertex_id v) const
    {
        graph h = *this;
        h.append_edge(u, v);
        h.sort_incidence();
        return h;
    }

    /// Same graph with vertex v renamed to perm[v]; edge ids follow the edges.
    graph relabeled(std::span<const vertex_id> perm) const
    {
        if (perm.size() != vertex_count())
            throw precondition_error("relabel: permutation size mismatch");
        graph h(vertex_count());
        h.ends_.resize(ends_.size());
        h.alive_ = alive_;
        h.live_edges_ = live_edges_;
        for (edge_id e = 0; e < ends_.size(); ++e) {
            if (!alive_[e])
                continue;
            auto [u, v] = ends_[e];
            vertex_id a = perm[u], b = perm[v];
            h.ends_[e] = {std::min(a, b), std::max(a, b)};
            h.adj_[a].push_back({b, e});
            h.adj_[b].push_back({a, e});
        }
        h.sort_incidence();
        return h;
    }

    /// Same edge set; used for structural comparison ignoring edge ids.
    std::vector<std::pair<vertex_id, vertex_id>> edge_pairs() const
    {
        std::vector<std::pair<vertex_id, vertex_id>> out;
        out.reserve(live_edges_);
        for (edge_id e = 0; e < ends_.size(); ++e)
            if (alive_[e])
                out.emplace_back(ends_[e].u, ends_[e].v);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool same_edge_set(const graph& a, const graph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edge_pairs() == b.edge_pairs();
    }

private:
    void append_edge(vertex_id u, vertex_id v)
    {
        if (u >= adj_.size() || v >= adj_.size())
            throw precondition_error("edge endpoint out of range");
        if (u == v)
            throw precondition_error("loops are not allowed");
        for (const auto& i : adj_[u])
            if (i.to == v)
                throw precondition_error("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        auto e = static_cast<edge_id>(ends_.size());
        ends_.push_back({std::min(u, v), std::max(u, v)});
        alive_.push_back(true);
        ++live_edges_;
        adj_[u].push_back({v, e});
        adj_[v].push_back({u, e});
    }

    void sort_incidence()
    {
        for (auto& a : adj_)
            std::sort(a.begin(), a.end(), [](const incidence& x, const incidence& y) { return x.to < y.to; });
        update_max_degree();
    }

    void update_max_degree()
    {
        max_degree_ = 0;
        for (const auto& a : adj_)
            max_degree_ = std::max(max_degree_, a.size());
    }

    std::vector<std::vector<incidence>> adj_;
    std::vector<edge_ends> ends_;
    std::vector<bool> alive_;
    std::size_t live_edges_ = 0;
    std::size_t max_degree_ = 0;
};

inline bool is_connected(const graph& g)
{
    const auto n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<vertex_id> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& i : g.incident(v))
            if (!seen[i.to]) {
                seen[i.to] = true;
                ++reached;
                stack.push_back(i.to);
            }
    }
    return reached == n;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<vertex_id>> components(const graph& g)
{
    const auto n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<vertex_id>> out;
    for (vertex_id s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<vertex_id> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (const auto& i : g.incident(v))
                if (comp[i.to] < 0) {
                    comp[i.to] = c;
                    stack.push_back(i.to);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

// Standard constructors.

inline graph cycle(std::size_t n)
{
    if (n < 3)
        throw precondition_error("cycle: need n >= 3");
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<vertex_id>((i + 1) % n));
    return graph(n, e);
}

inline graph path(std::size_t n)
{
    if (n < 1)
        throw precondition_error("path: need n >= 1");
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return graph(n, e);
}

inline graph complete(std::size_t n)
{
    if (n < 1)
        throw precondition_error("complete: need n >= 1");
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 0; i < n; ++i)
        for (vertex_id j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return graph(n, e);
}

/// K_{1,leaves}; the center is vertex 0.
inline graph star(std::size_t leaves)
{
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return graph(leaves + 1, e);
}

inline graph petersen()
{
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(i, i + 5);               // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return graph(10, e);
}

/// Woodall's extremal configuration: k vertices of degree 4 (ids 0..k-1),
/// each adjacent only to degree-delta vertices, and 2k vertices of degree
/// delta (ids k..3k-1), each with two degree-4 neighbors and delta-2
/// degree-delta neighbors.
///
/// The degree-delta vertices b_0..b_{2k-1} carry a circulant with connection
/// set {+-1, ..., +-floor((delta-2)/2)} plus the antipode +k when delta-2 is
/// odd. Vertex a_i is joined to b_{4i}, ..., b_{4i+3} (indices mod 2k), which
/// covers every b exactly twice. Triangles are not avoided.
inline graph woodall_example(std::size_t delta, std::size_t k)
{
    if (delta < 6)
        throw precondition_error("woodall_example: need delta >= 6");
    if (k < 2)
        throw precondition_error("woodall_example: need k >= 2 so each degree-4 vertex has 4 distinct neighbors");
    if (2 * k - 1 < delta - 2)
        throw precondition_error("woodall_example: a " + std::to_string(delta - 2) + "-regular graph on " +
                                 std::to_string(2 * k) + " vertices is impossible (need k >= ceil((delta-1)/2))");
    const std::size_t n = 3 * k;
    const std::size_t m2 = 2 * k;
    auto b = [&](std::size_t i) { return static_cast<vertex_id>(k + (i % m2)); };
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            e.emplace_back(static_cast<vertex_id>(i), b(4 * i + j));
    const std::size_t half = (delta - 2) / 2;
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t s = 1; s <= half; ++s)
            e.emplace_back(b(i), b(i + s));
    if ((delta - 2) % 2 == 1)
        for (std::size_t i = 0; i < k; ++i)
            e.emplace_back(b(i), b(i + k));
    return graph(n, e);
}

/// G - e; the remaining edges keep their ids.
inline graph delete_edge(const graph& g, edge_id e) { return g.without_edge(e); }

/// Average degree 2m/n as an exact fraction (numerator, denominator), unreduced.
inline std::pair<std::size_t, std::size_t> average_degree(const graph& g)
{
    return {2 * g.edge_count(), g.vertex_count()};
}

} // namespace critlab
