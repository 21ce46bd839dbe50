#pragma once

// Canonical labeling by individualization/refinement and exhaustive
// generation of all graphs on n vertices up to isomorphism. Intended for the
// small corpora (n <= 9) the test suites sweep over.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace critlab {

namespace detail {

using adjacency_rows = std::vector<std::uint64_t>;

inline adjacency_rows rows_of(const graph& g)
{
    if (g.vertex_count() > 64)
        throw precondition_error("canonical form: at most 64 vertices");
    adjacency_rows rows(g.vertex_count(), 0);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        for (const auto& i : g.incident(v))
            rows[v] |= std::uint64_t{1} << i.to;
    return rows;
}

/// Refine `color` (values are ranks 0..c-1) to the coarsest equitable
/// partition finer than it. Ranks are assigned by sorting label-free
/// signatures, so the result commutes with vertex relabeling.
inline void refine(const adjacency_rows& rows, std::vector<int>& color)
{
    const int n = static_cast<int>(rows.size());
    int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (rows[v] >> w & 1)
                    nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        keys.reserve(n);
        for (auto& s : sig)
            keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        const int now = static_cast<int>(keys.size());
        if (now == classes)
            return;
        classes = now;
    }
}

inline adjacency_rows permuted_rows(const adjacency_rows& rows, const std::vector<int>& pos)
{
    const int n = static_cast<int>(rows.size());
    adjacency_rows out(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (rows[v] >> w & 1)
                out[pos[v]] |= std::uint64_t{1} << pos[w];
    return out;
}

inline void canon_search(const adjacency_rows& rows, std::vector<int> color, adjacency_rows& best,
                         std::vector<int>& best_pos, bool& have)
{
    refine(rows, color);
    const int n = static_cast<int>(rows.size());
    std::vector<int> count(n, 0);
    for (int c : color)
        ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        auto code = permuted_rows(rows, color);
        if (!have || code < best) {
            best = std::move(code);
            best_pos = color;
            have = true;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target)
            continue;
        // Individualize v: it keeps rank `target`, every other rank >= target shifts up.
        std::vector<int> next = color;
        for (int w = 0; w < n; ++w)
            if (w != v && next[w] >= target)
                ++next[w];
        canon_search(rows, std::move(next), best, best_pos, have);
    }
}

} // namespace detail

/// Canonical relabeling: perm[v] is v's position in the canonical form.
inline std::vector<vertex_id> canonical_labeling(const graph& g)
{
    auto rows = detail::rows_of(g);
    const int n = static_cast<int>(rows.size());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(g.degree(static_cast<vertex_id>(v)));
    // Degrees are not ranks yet; compress.
    std::vector<int> vals = color;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& c : color)
        c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    detail::adjacency_rows best;
    std::vector<int> best_pos;
    bool have = false;
    detail::canon_search(rows, color, best, best_pos, have);
    return {best_pos.begin(), best_pos.end()};
}

/// Isomorphism-invariant certificate: equal iff the graphs are isomorphic.
inline std::vector<std::uint64_t> canonical_code(const graph& g)
{
    auto perm = canonical_labeling(g);
    std::vector<int> pos(perm.begin(), perm.end());
    auto code = detail::permuted_rows(detail::rows_of(g), pos);
    code.push_back(g.vertex_count());
    return code;
}

/// Canonically relabeled copy whose edge ids follow sorted (u, v) order.
inline graph canonical_form(const graph& g)
{
    auto pairs = g.relabeled(canonical_labeling(g)).edge_pairs();
    return graph(g.vertex_count(), pairs);
}

inline bool isomorphic(const graph& a, const graph& b)
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_code(a) == canonical_code(b);
}

/// All graphs on exactly n vertices up to isomorphism, each in canonical
/// form, ordered by edge count and then canonical code.
inline std::vector<graph> all_graphs(std::size_t n)
{
    if (n == 0)
        return {graph(0)};
    if (n > 10)
        throw precondition_error("all_graphs: n > 10 is not supported");
    std::vector<graph> level{graph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::pair<std::size_t, std::vector<std::uint64_t>>> seen;
        std::vector<std::pair<std::pair<std::size_t, std::vector<std::uint64_t>>, graph>> next;
        const auto fresh = static_cast<vertex_id>(k - 1);
        for (const auto& base : level) {
            auto pairs = base.edge_pairs();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                auto e = pairs;
                for (vertex_id v = 0; v + 1 < k; ++v)
                    if (mask >> v & 1)
                        e.emplace_back(v, fresh);
                graph h(k, e);
                auto key = std::make_pair(h.edge_count(), canonical_code(h));
                if (seen.insert(key).second)
                    next.emplace_back(std::move(key), canonical_form(h));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [key, h] : next)
            level.push_back(std::move(h));
    }
    return level;
}

inline std::vector<graph> all_connected_graphs(std::size_t n)
{
    auto all = all_graphs(n);
    std::vector<graph> out;
    for (auto& g : all)
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

} // namespace critlab
