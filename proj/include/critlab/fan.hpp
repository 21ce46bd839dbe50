#pragma once

// Tashkinov trees and their special shapes: Vizing fans, Kierstead paths,
// simple brooms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"

namespace critlab {

enum class fan_kind { vizing_fan, kierstead_path, simple_broom, tashkinov_tree };

inline const char* to_string(fan_kind k)
{
    switch (k) {
    case fan_kind::vizing_fan:
        return "vizing_fan";
    case fan_kind::kierstead_path:
        return "kierstead_path";
    case fan_kind::simple_broom:
        return "simple_broom";
    case fan_kind::tashkinov_tree:
        return "tashkinov_tree";
    }
    return "?";
}

/// (y0, e1, y1, ..., ep, yp). edges[i-1] joins vertices[parent[i]] and
/// vertices[i]; parent[0] is unused.
struct fan_tree {
    fan_kind kind = fan_kind::tashkinov_tree;
    std::vector<vertex_id> vertices;
    std::vector<edge_id> edges;
    std::vector<std::size_t> parent;

    std::size_t size() const { return edges.size(); }
};

namespace detail {

inline void push_vertex(fan_tree& t, std::size_t parent, vertex_id v, edge_id e)
{
    t.vertices.push_back(v);
    t.edges.push_back(e);
    t.parent.push_back(parent);
}

inline fan_tree seed_tree(const edge_coloring& phi, vertex_id y0, vertex_id y1, fan_kind kind)
{
    const graph& g = phi.host();
    auto e1 = g.edge_between(y0, y1);
    if (!e1)
        throw precondition_error("fan: y0 y1 is not an edge");
    if (phi.is_colored(*e1))
        throw precondition_error("fan: e1 must be uncolored");
    fan_tree t;
    t.kind = kind;
    t.vertices = {y0, y1};
    t.edges = {*e1};
    t.parent = {0, 0};
    return t;
}

inline color_set missing_union(const edge_coloring& phi, const std::vector<vertex_id>& vs, std::size_t upto)
{
    color_set s(phi.palette());
    for (std::size_t h = 0; h < upto; ++h)
        s |= phi.missing(vs[h]);
    return s;
}

} // namespace detail

/// Empty when t is a well-formed tree of its kind under phi; otherwise the reason.
inline std::string fan_tree_error(const edge_coloring& phi, const fan_tree& t)
{
    const graph& g = phi.host();
    const std::size_t p = t.edges.size();
    if (p < 1 || t.vertices.size() != p + 1 || t.parent.size() != p + 1)
        return "sizes of vertices, edges and parent disagree";
    for (std::size_t i = 0; i <= p; ++i)
        for (std::size_t j = i + 1; j <= p; ++j)
            if (t.vertices[i] == t.vertices[j])
                return "vertex repeated";
    for (std::size_t i = 1; i <= p; ++i) {
        const edge_id e = t.edges[i - 1];
        if (!g.has_edge_id(e))
            return "unknown edge";
        const std::size_t r = i == 1 ? 0 : t.parent[i];
        if (r >= i)
            return "edge " + std::to_string(i) + " attaches to a later vertex";
        auto [a, b] = g.ends(e);
        const vertex_id u = t.vertices[r], v = t.vertices[i];
        if (!((a == u && b == v) || (a == v && b == u)))
            return "edge " + std::to_string(i) + " does not join its listed ends";
        if (i == 1) {
            if (phi.is_colored(e))
                return "e1 is colored";
            continue;
        }
        if (!phi.is_colored(e))
            return "edge " + std::to_string(i) + " is uncolored";
        if (!detail::missing_union(phi, t.vertices, i).contains(phi[e]))
            return "color of edge " + std::to_string(i) + " is not missing at an earlier vertex";
    }
    for (std::size_t i = 2; i <= p; ++i) {
        const std::size_t r = t.parent[i];
        switch (t.kind) {
        case fan_kind::vizing_fan:
            if (r != 0)
                return "fan edge not at y0";
            break;
        case fan_kind::kierstead_path:
            if (r != i - 1)
                return "path edge not at previous vertex";
            break;
        case fan_kind::simple_broom: {
            if (i == 2 && r != 1)
                return "broom e2 must be y1 y2";
            if (i >= 3) {
                if (r != 2)
                    return "broom edge not at y2";
                if (!detail::missing_union(phi, t.vertices, 2).contains(phi[t.edges[i - 1]]))
                    return "broom leaf color not missing at y0 or y1";
            }
            break;
        }
        case fan_kind::tashkinov_tree:
            break;
        }
    }
    return {};
}

/// Maximal Vizing fan centered at y0 for the uncolored edge y0 y1. A neighbor
/// z joins when phi(y0 z) is missing at some vertex already in the fan;
/// smallest such color first.
inline fan_tree build_vizing_fan(const edge_coloring& phi, vertex_id y0, vertex_id y1)
{
    fan_tree t = detail::seed_tree(phi, y0, y1, fan_kind::vizing_fan);
    const graph& g = phi.host();
    color_set avail = phi.missing(y0) | phi.missing(y1);
    std::vector<bool> in(g.vertex_count(), false);
    in[y0] = in[y1] = true;
    for (;;) {
        bool grew = false;
        for (color c : avail.members()) {
            const edge_id e = phi.edge_at(y0, c);
            if (e == no_edge)
                continue;
            const vertex_id z = g.ends(e).other(y0);
            if (in[z])
                continue;
            detail::push_vertex(t, 0, z, e);
            in[z] = true;
            avail |= phi.missing(z);
            grew = true;
            break;
        }
        if (!grew)
            return t;
    }
}

/// All Kierstead paths (y0, e1, y1, ...) with at most max_edges edges, in
/// lexicographic order of their vertex sequences, shortest prefix first.
inline std::vector<fan_tree> enumerate_kierstead_paths(const edge_coloring& phi, vertex_id y0, vertex_id y1,
                                                       std::size_t max_edges = 3)
{
    const graph& g = phi.host();
    std::vector<fan_tree> out;
    fan_tree t = detail::seed_tree(phi, y0, y1, fan_kind::kierstead_path);
    std::vector<bool> on(g.vertex_count(), false);
    on[y0] = on[y1] = true;
    auto rec = [&](auto&& self, color_set gamma) -> void {
        out.push_back(t);
        if (t.edges.size() >= max_edges)
            return;
        const vertex_id last = t.vertices.back();
        for (const auto& i : g.incident(last)) {
            if (on[i.to] || !phi.is_colored(i.edge) || !gamma.contains(phi[i.edge]))
                continue;
            detail::push_vertex(t, t.vertices.size() - 1, i.to, i.edge);
            on[i.to] = true;
            self(self, gamma | phi.missing(i.to));
            on[i.to] = false;
            t.vertices.pop_back();
            t.edges.pop_back();
            t.parent.pop_back();
        }
    };
    rec(rec, phi.missing(y0) | phi.missing(y1));
    return out;
}

/// One item of a lemma about a fixed structure: whether its hypothesis
/// applies, whether it holds, and the offending vertices/colors if not.
struct structure_item {
    bool applies = true;
    bool holds = true;
    std::vector<vertex_id> vertices;
    std::vector<color> colors;
};

/// The four conclusions about a 4-vertex Kierstead path (y0, y1, y2, y3).
struct p4_verdict {
    std::array<structure_item, 4> items;

    bool all_hold() const
    {
        return std::all_of(items.begin(), items.end(), [](const auto& i) { return !i.applies || i.holds; });
    }
};

inline p4_verdict check_p4(const edge_coloring& phi, const fan_tree& k)
{
    if (k.kind != fan_kind::kierstead_path || k.edges.size() != 3)
        throw precondition_error("check_p4: need a Kierstead path with three edges");
    if (auto err = fan_tree_error(phi, k); !err.empty())
        throw precondition_error("check_p4: " + err);
    const graph& g = phi.host();
    const std::size_t delta = g.max_degree();
    const auto& y = k.vertices;
    p4_verdict out;

    const color_set m0 = phi.missing(y[0]), m1 = phi.missing(y[1]);
    const color_set both = m0 & m1;
    out.items[0].holds = both.empty();
    if (!out.items[0].holds) {
        out.items[0].vertices = {y[0], y[1]};
        out.items[0].colors = both.members();
    }
    auto elementary_item = [&](structure_item& item, bool applies) {
        item.applies = applies;
        if (!applies)
            return;
        auto ev = is_elementary(phi, y);
        item.holds = ev.elementary;
        if (!item.holds) {
            item.vertices = {ev.u, ev.v};
            item.colors = {ev.shared};
        }
    };
    elementary_item(out.items[1], g.degree(y[2]) < delta);
    elementary_item(out.items[2], g.degree(y[1]) < delta);

    const color_set hit = phi.missing(y[3]) & (m0 | m1);
    out.items[3].holds = hit.size() <= 1;
    if (!out.items[3].holds) {
        out.items[3].vertices = {y[3]};
        out.items[3].colors = hit.members();
    }
    return out;
}

/// For each choice of y2, the simple broom with every eligible leaf at y2.
/// Elementarity passes to subsets and the lemma's hypotheses depend only on
/// y0, y1, y2, so these maximal brooms stand for all simple brooms. When
/// max_p is set, leaves beyond it are dropped.
inline std::vector<fan_tree> enumerate_simple_brooms(const edge_coloring& phi, vertex_id y0, vertex_id y1,
                                                     std::optional<std::size_t> max_p = std::nullopt)
{
    const graph& g = phi.host();
    const fan_tree seed = detail::seed_tree(phi, y0, y1, fan_kind::simple_broom);
    const color_set gamma = phi.missing(y0) | phi.missing(y1);
    std::vector<fan_tree> out;
    for (const auto& i2 : g.incident(y1)) {
        const vertex_id y2 = i2.to;
        if (y2 == y0 || !phi.is_colored(i2.edge) || !gamma.contains(phi[i2.edge]))
            continue;
        fan_tree t = seed;
        detail::push_vertex(t, 1, y2, i2.edge);
        for (const auto& i : g.incident(y2)) {
            if (max_p && t.edges.size() >= *max_p)
                break;
            if (i.to == y0 || i.to == y1 || !phi.is_colored(i.edge) || !gamma.contains(phi[i.edge]))
                continue;
            detail::push_vertex(t, 2, i.to, i.edge);
        }
        out.push_back(std::move(t));
    }
    return out;
}

struct broom_verdict {
    bool applies = false; // |missing(y0) + missing(y1)| >= 4 and min(d(y1), d(y2)) < Delta
    elementary_verdict elementary;

    bool holds() const { return !applies || elementary.elementary; }
};

inline broom_verdict check_broom(const edge_coloring& phi, const fan_tree& b)
{
    if (b.kind != fan_kind::simple_broom || b.edges.size() < 2)
        throw precondition_error("check_broom: need a simple broom with at least two edges");
    if (auto err = fan_tree_error(phi, b); !err.empty())
        throw precondition_error("check_broom: " + err);
    const graph& g = phi.host();
    const auto& y = b.vertices;
    broom_verdict out;
    const std::size_t gamma = (phi.missing(y[0]) | phi.missing(y[1])).size();
    out.applies = gamma >= 4 && std::min(g.degree(y[1]), g.degree(y[2])) < g.max_degree();
    out.elementary = is_elementary(phi, y);
    return out;
}

struct tashkinov_report {
    fan_tree tree;
    elementary_verdict elementary; // observation only when k = Delta
};

/// Greedy maximal Tashkinov tree: repeatedly add the edge whose color is the
/// smallest one missing somewhere in the tree, breaking ties by the smallest
/// new vertex.
inline tashkinov_report build_tashkinov_tree(const edge_coloring& phi, vertex_id y0, vertex_id y1)
{
    const graph& g = phi.host();
    tashkinov_report out;
    fan_tree& t = out.tree;
    t = detail::seed_tree(phi, y0, y1, fan_kind::tashkinov_tree);
    std::vector<std::size_t> index(g.vertex_count(), SIZE_MAX);
    index[y0] = 0;
    index[y1] = 1;
    color_set avail = phi.missing(y0) | phi.missing(y1);
    for (;;) {
        bool grew = false;
        for (color c : avail.members()) {
            vertex_id best = 0;
            std::size_t best_parent = SIZE_MAX;
            edge_id best_edge = no_edge;
            for (std::size_t h = 0; h < t.vertices.size(); ++h) {
                const edge_id e = phi.edge_at(t.vertices[h], c);
                if (e == no_edge)
                    continue;
                const vertex_id z = g.ends(e).other(t.vertices[h]);
                if (index[z] != SIZE_MAX)
                    continue;
                if (best_edge == no_edge || z < best) {
                    best = z;
                    best_parent = h;
                    best_edge = e;
                }
            }
            if (best_edge == no_edge)
                continue;
            index[best] = t.vertices.size();
            detail::push_vertex(t, best_parent, best, best_edge);
            avail |= phi.missing(best);
            grew = true;
            break;
        }
        if (!grew)
            break;
    }
    out.elementary = is_elementary(phi, t.vertices);
    return out;
}

} // namespace critlab
