#pragma once

// (alpha, beta)-chains, chain flips, and the dual coloring move.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "coloring.hpp"

namespace critlab {

class stale_chain_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class chain_kind { path, cycle };

/// The component of E_alpha + E_beta containing a vertex.
///
/// Paths list edges end to end; `ends` holds both endpoints (one entry for
/// the degenerate chain of a vertex touching neither color, none for a cycle).
struct kempe_chain {
    color alpha = no_color;
    color beta = no_color;
    chain_kind kind = chain_kind::path;
    std::vector<edge_id> edges;
    std::vector<color> colors; // colors of `edges` when the chain was taken
    std::vector<vertex_id> vertices;
    std::vector<vertex_id> ends;

    bool contains(vertex_id v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }
    bool degenerate() const { return edges.empty(); }
};

inline kempe_chain find_kempe_chain(const edge_coloring& phi, vertex_id v, color alpha, color beta)
{
    if (alpha == beta)
        throw precondition_error("kempe_chain: alpha and beta must differ");
    if (alpha == no_color || beta == no_color || alpha > phi.palette() || beta > phi.palette())
        throw precondition_error("kempe_chain: colors outside the palette");
    const graph& g = phi.host();

    // Walk from v leaving along `first`, alternating; returns edges and far vertex.
    auto walk = [&](color first, std::vector<edge_id>& es, std::vector<vertex_id>& vs) -> bool {
        vertex_id cur = v;
        color want = first;
        for (;;) {
            const edge_id e = phi.edge_at(cur, want);
            if (e == no_edge)
                return false;
            es.push_back(e);
            cur = g.ends(e).other(cur);
            if (cur == v)
                return true; // closed an even cycle
            vs.push_back(cur);
            want = want == alpha ? beta : alpha;
        }
    };

    kempe_chain ch;
    ch.alpha = alpha;
    ch.beta = beta;
    std::vector<edge_id> fwd, back;
    std::vector<vertex_id> fwd_v, back_v;
    if (walk(alpha, fwd, fwd_v)) {
        ch.kind = chain_kind::cycle;
        ch.edges = std::move(fwd);
        ch.vertices.push_back(v);
        ch.vertices.insert(ch.vertices.end(), fwd_v.begin(), fwd_v.end());
    } else {
        walk(beta, back, back_v);
        ch.kind = chain_kind::path;
        std::reverse(back.begin(), back.end());
        std::reverse(back_v.begin(), back_v.end());
        ch.edges = back;
        ch.edges.insert(ch.edges.end(), fwd.begin(), fwd.end());
        ch.vertices = back_v;
        ch.vertices.push_back(v);
        ch.vertices.insert(ch.vertices.end(), fwd_v.begin(), fwd_v.end());
        ch.ends.push_back(ch.vertices.front());
        if (ch.vertices.size() > 1)
            ch.ends.push_back(ch.vertices.back());
    }
    ch.colors.reserve(ch.edges.size());
    for (auto e : ch.edges)
        ch.colors.push_back(phi[e]);
    return ch;
}

/// phi / P: swap alpha and beta on the chain's edges, in place.
///
/// Throws stale_chain_error when phi changed since the chain was taken in a
/// way that affects it.
inline void flip_in_place(edge_coloring& phi, const kempe_chain& ch)
{
    for (std::size_t i = 0; i < ch.edges.size(); ++i)
        if (phi[ch.edges[i]] != ch.colors[i])
            throw stale_chain_error("kempe_flip: chain edge changed color since the chain was computed");
    if (ch.kind == chain_kind::path && !ch.edges.empty()) {
        // Maximality: each end must still miss the color that would extend it.
        for (std::size_t side = 0; side < 2; ++side) {
            const vertex_id end = side == 0 ? ch.vertices.front() : ch.vertices.back();
            const color last = side == 0 ? ch.colors.front() : ch.colors.back();
            const color other = last == ch.alpha ? ch.beta : ch.alpha;
            if (phi.sees(end, other))
                throw stale_chain_error("kempe_flip: chain is no longer a maximal component");
        }
    }
    for (auto e : ch.edges)
        phi.clear_raw(e);
    for (std::size_t i = 0; i < ch.edges.size(); ++i)
        phi.set_raw(ch.edges[i], ch.colors[i] == ch.alpha ? ch.beta : ch.alpha);
}

inline edge_coloring kempe_flip(const edge_coloring& phi, const kempe_chain& ch)
{
    edge_coloring out = phi;
    flip_in_place(out, ch);
    return out;
}

/// From phi on G - xy with phi(xz) missing at y, build the coloring of
/// G - xz that gives xy the color of xz.
inline edge_coloring dual_coloring(const edge_coloring& phi, vertex_id x, vertex_id y, vertex_id z)
{
    const graph& g = phi.host();
    auto xy = g.edge_between(x, y);
    auto xz = g.edge_between(x, z);
    if (!xy || !xz)
        throw precondition_error("dual_coloring: xy and xz must be edges");
    if (phi.is_colored(*xy))
        throw precondition_error("dual_coloring: xy must be uncolored");
    const color c = phi[*xz];
    if (c == no_color)
        throw precondition_error("dual_coloring: xz must be colored");
    if (!phi.misses(y, c))
        throw precondition_error("dual_coloring: color of xz is not missing at y");
    edge_coloring out = phi;
    out.uncolor(*xz);
    out.assign(*xy, c);
    return out;
}

} // namespace critlab
