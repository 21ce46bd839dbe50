#pragma once

// Proper partial edge colorings with palette {1..k}.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace critlab {

using color = std::uint32_t;

/// Color 0 marks an uncolored edge; real colors are 1..k.
inline constexpr color no_color = 0;

/// Set of colors drawn from {1..k}, stored as a bitset over 0..k.
class color_set {
public:
    color_set() = default;
    explicit color_set(color k) : k_(k), words_((k + 64) / 64, 0) {}

    static color_set full(color k)
    {
        color_set s(k);
        for (color c = 1; c <= k; ++c)
            s.insert(c);
        return s;
    }

    color palette() const { return k_; }

    bool contains(color c) const { return c >= 1 && c <= k_ && (words_[c / 64] >> (c % 64) & 1u); }
    void insert(color c) { words_[c / 64] |= std::uint64_t{1} << (c % 64); }
    void erase(color c) { words_[c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

    std::size_t size() const
    {
        std::size_t s = 0;
        for (auto w : words_)
            s += static_cast<std::size_t>(std::popcount(w));
        return s;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or no_color.
    color first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<color>(i * 64 + std::countr_zero(words_[i]));
        return no_color;
    }

    std::vector<color> members() const
    {
        std::vector<color> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                out.push_back(static_cast<color>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    color_set& operator&=(const color_set& o)
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] &= o.words_[i];
        for (std::size_t i = o.words_.size(); i < words_.size(); ++i)
            words_[i] = 0;
        return *this;
    }

    color_set& operator|=(const color_set& o)
    {
        if (o.words_.size() > words_.size()) {
            words_.resize(o.words_.size(), 0);
            k_ = o.k_;
        }
        for (std::size_t i = 0; i < o.words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference.
    color_set& operator-=(const color_set& o)
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend color_set operator&(color_set a, const color_set& b) { return a &= b; }
    friend color_set operator|(color_set a, const color_set& b) { return a |= b; }
    friend color_set operator-(color_set a, const color_set& b) { return a -= b; }
    friend bool operator==(const color_set& a, const color_set& b) { return a.members() == b.members(); }

    bool intersects(const color_set& o) const
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

private:
    color k_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A proper partial edge-k-coloring of a graph.
///
/// Keeps, for each vertex and color, the incident edge carrying that color,
/// so Kempe-chain walks and missing-color queries are O(1) per step. The
/// graph must outlive the coloring. Every mutator keeps the coloring proper;
/// an assignment that would break properness throws.
class edge_coloring {
public:
    edge_coloring(const graph& g, color k)
        : g_(&g), k_(k), of_(g.edge_capacity(), no_color), at_(g.vertex_count() * (std::size_t{k} + 1), no_edge)
    {
    }

    const graph& host() const { return *g_; }
    color palette() const { return k_; }

    color operator[](edge_id e) const { return of_.at(e); }
    bool is_colored(edge_id e) const { return of_.at(e) != no_color; }

    /// The edge at v with color c, or no_edge.
    edge_id edge_at(vertex_id v, color c) const
    {
        if (c == no_color || c > k_)
            return no_edge;
        return at_[slot(v, c)];
    }

    bool sees(vertex_id v, color c) const { return edge_at(v, c) != no_edge; }
    bool misses(vertex_id v, color c) const { return c >= 1 && c <= k_ && edge_at(v, c) == no_edge; }

    /// phi(v): colors present at v.
    color_set seen(vertex_id v) const
    {
        color_set s(k_);
        for (color c = 1; c <= k_; ++c)
            if (at_[slot(v, c)] != no_edge)
                s.insert(c);
        return s;
    }

    /// phi-bar(v): colors of {1..k} absent at v.
    color_set missing(vertex_id v) const
    {
        color_set s(k_);
        for (color c = 1; c <= k_; ++c)
            if (at_[slot(v, c)] == no_edge)
                s.insert(c);
        return s;
    }

    std::size_t missing_count(vertex_id v) const
    {
        std::size_t s = 0;
        for (color c = 1; c <= k_; ++c)
            s += at_[slot(v, c)] == no_edge;
        return s;
    }

    bool can_assign(edge_id e, color c) const
    {
        if (c == no_color || c > k_)
            return false;
        auto [u, v] = g_->ends(e);
        auto eu = at_[slot(u, c)], ev = at_[slot(v, c)];
        return (eu == no_edge || eu == e) && (ev == no_edge || ev == e);
    }

    /// Color (or recolor) e with c; throws if that would break properness.
    void assign(edge_id e, color c)
    {
        if (!can_assign(e, c))
            throw precondition_error("assign: color " + std::to_string(c) + " on edge " + std::to_string(e) +
                                     " conflicts or is outside the palette");
        uncolor(e);
        set_raw(e, c);
    }

    void uncolor(edge_id e)
    {
        const color c = of_.at(e);
        if (c == no_color)
            return;
        auto [u, v] = g_->ends(e);
        at_[slot(u, c)] = no_edge;
        at_[slot(v, c)] = no_edge;
        of_[e] = no_color;
    }

    std::vector<edge_id> uncolored_edges() const
    {
        std::vector<edge_id> out;
        for (auto e : g_->edges())
            if (of_[e] == no_color)
                out.push_back(e);
        return out;
    }

    bool is_total() const
    {
        for (auto e : g_->edges())
            if (of_[e] == no_color)
                return false;
        return true;
    }

    /// E_alpha.
    std::vector<edge_id> color_class(color c) const
    {
        std::vector<edge_id> out;
        for (auto e : g_->edges())
            if (of_[e] == c)
                out.push_back(e);
        return out;
    }

    /// Raw per-edge table, indexed by edge id.
    const std::vector<color>& raw() const { return of_; }

    friend bool operator==(const edge_coloring& a, const edge_coloring& b)
    {
        return a.g_ == b.g_ && a.k_ == b.k_ && a.of_ == b.of_;
    }

    // Unchecked swap used by Kempe flips; callers restore properness.
    void set_raw(edge_id e, color c)
    {
        auto [u, v] = g_->ends(e);
        of_[e] = c;
        at_[slot(u, c)] = e;
        at_[slot(v, c)] = e;
    }

    void clear_raw(edge_id e)
    {
        const color c = of_[e];
        auto [u, v] = g_->ends(e);
        if (at_[slot(u, c)] == e)
            at_[slot(u, c)] = no_edge;
        if (at_[slot(v, c)] == e)
            at_[slot(v, c)] = no_edge;
        of_[e] = no_color;
    }

private:
    std::size_t slot(vertex_id v, color c) const { return std::size_t{v} * (std::size_t{k_} + 1) + c; }

    const graph* g_;
    color k_;
    std::vector<color> of_;
    std::vector<edge_id> at_;
};

/// Independent recheck of properness from the per-edge table alone.
inline bool is_proper(const graph& g, const std::vector<color>& colors, color k, bool require_total = false)
{
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> used(std::size_t{k} + 1, false);
        for (const auto& i : g.incident(v)) {
            const color c = colors.at(i.edge);
            if (c == no_color) {
                if (require_total)
                    return false;
                continue;
            }
            if (c > k || used[c])
                return false;
            used[c] = true;
        }
    }
    return true;
}

inline bool is_proper(const edge_coloring& phi, bool require_total = false)
{
    return is_proper(phi.host(), phi.raw(), phi.palette(), require_total);
}

inline color_set missing_colors(const edge_coloring& phi, vertex_id v) { return phi.missing(v); }

/// Outcome of an elementarity test; on failure names two vertices sharing a missing color.
struct elementary_verdict {
    bool elementary = true;
    vertex_id u = 0;
    vertex_id v = 0;
    color shared = no_color;

    explicit operator bool() const { return elementary; }
};

inline elementary_verdict is_elementary(const edge_coloring& phi, const std::vector<vertex_id>& xs)
{
    std::vector<color_set> miss;
    miss.reserve(xs.size());
    for (auto x : xs)
        miss.push_back(phi.missing(x));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j])
                continue;
            auto common = miss[i] & miss[j];
            if (!common.empty())
                return {false, xs[i], xs[j], common.first()};
        }
    return {};
}

} // namespace critlab
