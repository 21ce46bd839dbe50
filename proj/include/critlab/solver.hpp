#pragma once

// Exact chromatic-index decision, constructive (Delta+1)-coloring, and
// edge-criticality tests.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "coloring.hpp"
#include "kempe.hpp"

namespace critlab {

struct solve_budget {
    std::optional<std::uint64_t> node_limit;
    std::optional<double> wall_limit; // seconds
};

enum class decision { yes, no, budget_exhausted };

struct colorability_result {
    decision outcome = decision::no;
    std::optional<edge_coloring> coloring; // total except for the skipped edge
    std::uint64_t nodes = 0;
};

/// Thrown by callers that need a definite answer when the budget ran out.
class budget_exhausted_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class budget_clock {
public:
    explicit budget_clock(const solve_budget& b) : budget_(b), start_(std::chrono::steady_clock::now())
    {
        if (b.node_limit && *b.node_limit == 0)
            throw precondition_error("solve_budget: node_limit must be positive");
        if (b.wall_limit && *b.wall_limit <= 0)
            throw precondition_error("solve_budget: wall_limit must be positive");
    }

    /// Count one search node; false once the budget is spent.
    bool tick()
    {
        ++nodes_;
        if (budget_.node_limit && nodes_ > *budget_.node_limit)
            return false;
        if (budget_.wall_limit && (nodes_ & 255) == 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > *budget_.wall_limit)
                return false;
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    solve_budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

/// Exhaustive DSATUR-style search over the live edges of g except `skip`.
///
/// Branches on the uncolored edge with the fewest colors free at both ends
/// (ties: more uncolored neighboring edges, then lower id), tries colors in
/// ascending order, and opens at most one previously unused color per node.
class exact_search {
public:
    exact_search(const graph& g, color k, edge_id skip, budget_clock& clock)
        : g_(g), k_(k), skip_(skip), clock_(clock), used_(g.vertex_count(), 0), of_(g.edge_capacity(), no_color),
          open_(g.vertex_count(), 0)
    {
        for (auto e : g.edges())
            if (e != skip) {
                todo_.push_back(e);
                auto [u, v] = g.ends(e);
                ++open_[u];
                ++open_[v];
            }
        palette_ = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (k + 1)) - 2);
    }

    /// true: found; false: exhausted; nullopt: budget ran out.
    std::optional<bool> run()
    {
        aborted_ = false;
        const bool found = descend(0);
        if (aborted_)
            return std::nullopt;
        return found;
    }

    const std::vector<color>& colors() const { return of_; }

private:
    bool descend(color maxc)
    {
        if (todo_.empty())
            return true;
        const std::uint64_t allowed =
            palette_ & (maxc >= k_ ? ~std::uint64_t{0} : ((std::uint64_t{1} << (maxc + 2)) - 1));
        std::size_t best_i = 0;
        int best_count = 65;
        unsigned best_tie = 0;
        for (std::size_t i = 0; i < todo_.size(); ++i) {
            auto [u, v] = g_.ends(todo_[i]);
            const int count = std::popcount(allowed & ~(used_[u] | used_[v]));
            const unsigned tie = open_[u] + open_[v];
            if (count < best_count || (count == best_count && tie > best_tie)) {
                best_count = count;
                best_tie = tie;
                best_i = i;
                if (count == 0)
                    return false;
            }
        }
        const edge_id e = todo_[best_i];
        auto [u, v] = g_.ends(e);
        std::swap(todo_[best_i], todo_.back());
        todo_.pop_back();
        --open_[u];
        --open_[v];
        std::uint64_t avail = allowed & ~(used_[u] | used_[v]);
        bool found = false;
        while (avail) {
            const auto c = static_cast<color>(std::countr_zero(avail));
            avail &= avail - 1;
            if (!clock_.tick()) {
                aborted_ = true;
                break;
            }
            const std::uint64_t bit = std::uint64_t{1} << c;
            used_[u] |= bit;
            used_[v] |= bit;
            of_[e] = c;
            found = descend(std::max(maxc, c));
            if (found || aborted_)
                break;
            used_[u] &= ~bit;
            used_[v] &= ~bit;
            of_[e] = no_color;
        }
        if (!found) {
            ++open_[u];
            ++open_[v];
            todo_.push_back(e);
            std::swap(todo_[best_i], todo_.back());
        }
        return found;
    }

    const graph& g_;
    color k_;
    edge_id skip_;
    budget_clock& clock_;
    std::uint64_t palette_;
    std::vector<std::uint64_t> used_;
    std::vector<color> of_;
    std::vector<unsigned> open_;
    std::vector<edge_id> todo_;
    bool aborted_ = false;
};

/// Greedy coloring that, when an edge has no common free color, flips one
/// Kempe chain to create one. Returns the coloring or nothing on a stuck edge.
inline std::optional<edge_coloring> kempe_greedy(const graph& g, color k, edge_id skip, std::vector<edge_id> order,
                                                 budget_clock& clock)
{
    edge_coloring phi(g, k);
    for (auto e : order) {
        if (e == skip)
            continue;
        if (!clock.tick())
            return std::nullopt;
        auto [u, v] = g.ends(e);
        color_set common = phi.missing(u) & phi.missing(v);
        if (!common.empty()) {
            phi.assign(e, common.first());
            continue;
        }
        bool repaired = false;
        const auto mu = phi.missing(u).members();
        const auto mv = phi.missing(v).members();
        for (color alpha : mu) {
            for (color beta : mv) {
                // alpha free at u, seen at v; beta free at v, seen at u.
                auto ch = find_kempe_chain(phi, v, alpha, beta);
                if (ch.contains(u))
                    continue;
                flip_in_place(phi, ch);
                phi.assign(e, alpha);
                repaired = true;
                break;
            }
            if (repaired)
                break;
        }
        if (!repaired)
            return std::nullopt;
    }
    return phi;
}

inline bool overfull(const graph& g, color k, edge_id skip)
{
    // Union-find over the live edges other than `skip`; any component with
    // more edges than k disjoint matchings can hold is a proof of "no".
    const auto n = g.vertex_count();
    std::vector<vertex_id> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](vertex_id x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto e : g.edges())
        if (e != skip) {
            auto [u, v] = g.ends(e);
            parent[find(u)] = find(v);
        }
    std::vector<std::size_t> verts(n, 0), edges(n, 0);
    for (vertex_id v = 0; v < n; ++v)
        ++verts[find(v)];
    for (auto e : g.edges())
        if (e != skip)
            ++edges[find(g.ends(e).u)];
    for (vertex_id r = 0; r < n; ++r)
        if (verts[r] > 0 && edges[r] > std::size_t{k} * (verts[r] / 2))
            return true;
    return false;
}

} // namespace detail

/// Constructive proper edge coloring with Delta + 1 colors (fan rotation
/// plus one Kempe path inversion per edge).
inline edge_coloring vizing_color(const graph& g)
{
    const auto k = static_cast<color>(g.max_degree() + 1);
    edge_coloring phi(g, k);
    for (auto e0 : g.edges()) {
        const vertex_id u = g.ends(e0).u;
        // Maximal fan at u starting with the uncolored edge.
        std::vector<vertex_id> fan{g.ends(e0).v};
        std::vector<bool> in_fan(g.vertex_count(), false);
        in_fan[fan[0]] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& i : g.incident(u)) {
                if (in_fan[i.to] || !phi.is_colored(i.edge))
                    continue;
                if (phi.misses(fan.back(), phi[i.edge])) {
                    fan.push_back(i.to);
                    in_fan[i.to] = true;
                    grew = true;
                    break;
                }
            }
        }
        const color c = phi.missing(u).first();
        const color d = phi.missing(fan.back()).first();
        if (c != d) {
            auto ch = find_kempe_chain(phi, u, c, d);
            flip_in_place(phi, ch);
        }
        // First prefix that is still a fan and whose tip misses d.
        std::size_t w = 0;
        for (std::size_t j = 0; j < fan.size(); ++j) {
            bool ok = true;
            for (std::size_t i = 1; i <= j && ok; ++i) {
                const edge_id ei = *g.edge_between(u, fan[i]);
                ok = phi.is_colored(ei) && phi.misses(fan[i - 1], phi[ei]);
            }
            if (ok && phi.misses(fan[j], d)) {
                w = j;
                break;
            }
        }
        // Rotate the fan prefix; the tip edge ends up uncolored, then takes d.
        for (std::size_t i = 0; i < w; ++i) {
            const edge_id cur = *g.edge_between(u, fan[i]);
            const edge_id nxt = *g.edge_between(u, fan[i + 1]);
            const color cc = phi[nxt];
            phi.uncolor(nxt);
            phi.assign(cur, cc);
        }
        phi.assign(*g.edge_between(u, fan[w]), d);
    }
    return phi;
}

/// Decide whether the live edges of g (minus `skip`, if given) admit a proper
/// k-edge-coloring. "no" is only ever returned after exhaustive search or an
/// overfull-component count; a spent budget is reported as such.
inline colorability_result is_k_edge_colorable(const graph& g, color k, const solve_budget& budget = {},
                                               std::optional<edge_id> skip = std::nullopt)
{
    const edge_id sk = skip.value_or(no_edge);
    if (skip && !g.has_edge_id(*skip))
        throw precondition_error("is_k_edge_colorable: unknown skipped edge");
    detail::budget_clock clock(budget);
    colorability_result out;

    std::size_t delta = 0;
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        std::size_t d = g.degree(v);
        if (skip && (g.ends(sk).u == v || g.ends(sk).v == v))
            --d;
        delta = std::max(delta, d);
    }
    if (delta > k || detail::overfull(g, k, sk)) {
        out.outcome = decision::no;
        return out;
    }
    if (k >= delta + 1 && !skip) {
        out.outcome = decision::yes;
        auto phi = vizing_color(g);
        // vizing_color uses exactly Delta + 1 <= k colors.
        edge_coloring wide(g, k);
        for (auto e : g.edges())
            wide.assign(e, phi[e]);
        out.coloring = std::move(wide);
        return out;
    }

    auto order = g.edges();
    if (auto phi = detail::kempe_greedy(g, k, sk, order, clock)) {
        out.outcome = decision::yes;
        out.coloring = std::move(phi);
        out.nodes = clock.nodes();
        return out;
    }
    if (k > 63)
        throw precondition_error("is_k_edge_colorable: exact search supports at most 63 colors");
    detail::exact_search search(g, k, sk, clock);
    auto res = search.run();
    out.nodes = clock.nodes();
    if (!res) {
        out.outcome = decision::budget_exhausted;
        return out;
    }
    if (*res) {
        edge_coloring phi(g, k);
        for (auto e : g.edges())
            if (e != sk)
                phi.assign(e, search.colors()[e]);
        out.outcome = decision::yes;
        out.coloring = std::move(phi);
    } else {
        out.outcome = decision::no;
    }
    return out;
}

struct chromatic_index_result {
    std::optional<std::size_t> value; // unset when the budget ran out
    std::optional<edge_coloring> coloring;
    std::uint64_t nodes = 0;
};

/// chi'(G - skip) in {Delta, Delta + 1}; 0 for edgeless graphs.
inline chromatic_index_result chromatic_index(const graph& g, const solve_budget& budget = {},
                                              std::optional<edge_id> skip = std::nullopt)
{
    chromatic_index_result out;
    std::size_t delta = 0, m = g.edge_count();
    if (skip) {
        --m;
        for (vertex_id v = 0; v < g.vertex_count(); ++v) {
            std::size_t d = g.degree(v);
            if (g.ends(*skip).u == v || g.ends(*skip).v == v)
                --d;
            delta = std::max(delta, d);
        }
    } else {
        delta = g.max_degree();
    }
    if (m == 0) {
        out.value = 0;
        out.coloring = edge_coloring(g, 0);
        return out;
    }
    auto r = is_k_edge_colorable(g, static_cast<color>(delta), budget, skip);
    out.nodes = r.nodes;
    if (r.outcome == decision::budget_exhausted)
        return out;
    if (r.outcome == decision::yes) {
        out.value = delta;
        out.coloring = std::move(r.coloring);
        return out;
    }
    out.value = delta + 1;
    auto phi = vizing_color(g);
    if (skip)
        phi.uncolor(*skip);
    out.coloring = std::move(phi);
    return out;
}

/// chi'(G - e) < chi'(G).
inline std::optional<bool> is_critical_edge(const graph& g, edge_id e, const solve_budget& budget = {})
{
    if (!g.has_edge_id(e))
        throw precondition_error("is_critical_edge: unknown edge id");
    auto whole = chromatic_index(g, budget);
    if (!whole.value)
        return std::nullopt;
    auto less = chromatic_index(g, budget, e);
    if (!less.value)
        return std::nullopt;
    return *less.value < *whole.value;
}

struct criticality_verdict {
    std::size_t delta = 0;
    std::optional<std::size_t> chi_prime;
    bool is_critical = false;
    bool exhausted = false;     // budget ran out; see edges_checked for progress
    bool disconnected = false;  // rejected by the connectivity pre-filter
    std::size_t edges_checked = 0;
    std::optional<edge_coloring> class_one_coloring;
    std::optional<edge_id> non_critical_edge; // G - e still needs Delta + 1 colors
    std::vector<std::pair<edge_id, edge_coloring>> edge_certificates; // Delta-colorings of G - e
    std::uint64_t nodes = 0;
};

/// Class two and every edge critical. Colorings in the verdict live on g with
/// the deleted edge left uncolored.
inline criticality_verdict is_edge_delta_critical(const graph& g, const solve_budget& budget = {})
{
    if (g.edge_count() == 0)
        throw precondition_error("is_edge_delta_critical: graph has no edges");
    criticality_verdict out;
    out.delta = g.max_degree();
    const auto k = static_cast<color>(out.delta);
    if (!is_connected(g)) {
        out.disconnected = true;
    }
    auto whole = is_k_edge_colorable(g, k, budget);
    out.nodes += whole.nodes;
    if (whole.outcome == decision::budget_exhausted) {
        out.exhausted = true;
        return out;
    }
    if (whole.outcome == decision::yes) {
        out.chi_prime = out.delta;
        out.class_one_coloring = std::move(whole.coloring);
        return out;
    }
    out.chi_prime = out.delta + 1;
    if (out.disconnected)
        return out;
    for (auto e : g.edges()) {
        auto r = is_k_edge_colorable(g, k, budget, e);
        out.nodes += r.nodes;
        if (r.outcome == decision::budget_exhausted) {
            out.exhausted = true;
            return out;
        }
        ++out.edges_checked;
        if (r.outcome == decision::no) {
            out.non_critical_edge = e;
            out.edge_certificates.clear();
            return out;
        }
        out.edge_certificates.emplace_back(e, std::move(*r.coloring));
    }
    out.is_critical = true;
    return out;
}

/// Visit every proper k-coloring of the live edges except `skip` (no color
/// symmetry reduction). The visitor returns false to stop early. Returns the
/// number visited.
inline std::size_t enumerate_colorings(const graph& g, color k, std::optional<edge_id> skip,
                                       const std::function<bool(const edge_coloring&)>& visit,
                                       std::size_t cap = std::numeric_limits<std::size_t>::max())
{
    edge_coloring phi(g, k);
    std::vector<edge_id> order;
    // Edge order by BFS from the lowest vertex keeps conflicts local.
    {
        std::vector<bool> seen_e(g.edge_capacity(), false), seen_v(g.vertex_count(), false);
        for (vertex_id s = 0; s < g.vertex_count(); ++s) {
            if (seen_v[s])
                continue;
            std::vector<vertex_id> queue{s};
            seen_v[s] = true;
            for (std::size_t h = 0; h < queue.size(); ++h)
                for (const auto& i : g.incident(queue[h])) {
                    if (!seen_e[i.edge] && (!skip || i.edge != *skip)) {
                        seen_e[i.edge] = true;
                        order.push_back(i.edge);
                    }
                    if (!seen_v[i.to]) {
                        seen_v[i.to] = true;
                        queue.push_back(i.to);
                    }
                }
        }
    }
    std::size_t count = 0;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop)
            return;
        if (i == order.size()) {
            ++count;
            if (!visit(phi) || count >= cap)
                stop = true;
            return;
        }
        const edge_id e = order[i];
        for (color c = 1; c <= k && !stop; ++c)
            if (phi.can_assign(e, c)) {
                phi.set_raw(e, c);
                rec(i + 1);
                phi.clear_raw(e);
            }
    };
    rec(0);
    return count;
}

/// Distinct k-colorings of G - skip obtained from a solver coloring by random
/// Kempe-chain flips. Fewer than `count` come back only when the walk stops
/// finding new ones.
inline std::vector<edge_coloring> sample_colorings(const edge_coloring& seed, std::size_t count, std::mt19937_64& rng,
                                                   std::size_t max_steps = 0)
{
    const graph& g = seed.host();
    const color k = seed.palette();
    std::vector<edge_coloring> out{seed};
    if (k < 2 || g.vertex_count() == 0)
        return out;
    if (max_steps == 0)
        max_steps = 64 * count + 256;
    edge_coloring cur = seed;
    std::uniform_int_distribution<vertex_id> pick_v(0, static_cast<vertex_id>(g.vertex_count() - 1));
    std::uniform_int_distribution<color> pick_c(1, k);
    for (std::size_t step = 0; step < max_steps && out.size() < count; ++step) {
        const vertex_id v = pick_v(rng);
        const color a = pick_c(rng);
        color b = pick_c(rng);
        if (a == b)
            continue;
        auto ch = find_kempe_chain(cur, v, a, b);
        if (ch.degenerate())
            continue;
        flip_in_place(cur, ch);
        if (std::find(out.begin(), out.end(), cur) == out.end())
            out.push_back(cur);
    }
    return out;
}

} // namespace critlab
