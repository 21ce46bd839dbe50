#pragma once

// Adjacency lemmas for edge-Delta-critical graphs as evaluable predicates.
// Each is a theorem for critical graphs; on other graphs a failure is a
// certificate that the graph is not critical.

#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "degree_stats.hpp"
#include "exact_real.hpp"

namespace critlab {

/// A failed inequality: observed >= required did not hold at `vertices`.
struct lemma_witness {
    std::vector<vertex_id> vertices;
    std::string quantity;
    exact_real observed;
    exact_real required;
};

struct lemma_verdict {
    lemma_verdict() = default;
    explicit lemma_verdict(std::string name) : lemma(std::move(name)) {}

    std::string lemma;
    bool holds = true;
    std::size_t checked = 0;
    std::size_t not_applicable = 0;
    std::optional<lemma_witness> witness; // first failure in ascending id order

    explicit operator bool() const { return holds; }
};

namespace detail {

inline void record(lemma_verdict& v, bool ok, lemma_witness w)
{
    ++v.checked;
    if (!ok && v.holds) {
        v.holds = false;
        v.witness = std::move(w);
    }
}

inline long long ll(std::size_t x) { return static_cast<long long>(x); }

} // namespace detail

/// sigma_Delta(x, y) >= Delta - d(x) + 1 for every ordered adjacent pair.
inline lemma_verdict check_val(const graph& g)
{
    lemma_verdict v{"val"};
    const auto delta = detail::ll(g.max_degree());
    for (vertex_id x = 0; x < g.vertex_count(); ++x)
        for (const auto& i : g.incident(x)) {
            const auto s = detail::ll(sigma_at_least(g, x, i.to, delta));
            const auto need = delta - detail::ll(g.degree(x)) + 1;
            detail::record(v, s >= need, {{x, i.to}, "sigma_Delta(x,y)", s, need});
        }
    return v;
}

/// For each ordered edge (x, y): at least Delta - sigma(x,y) vertices z in
/// N(x) - y have sigma(x,z) >= 2 Delta - d(x) - sigma(x,y).
inline lemma_verdict check_w22(const graph& g)
{
    lemma_verdict v{"w22"};
    const auto delta = detail::ll(g.max_degree());
    for (vertex_id x = 0; x < g.vertex_count(); ++x)
        for (const auto& iy : g.incident(x)) {
            const auto s = detail::ll(sigma(g, x, iy.to));
            const auto bar = 2 * delta - detail::ll(g.degree(x)) - s;
            long long count = 0;
            for (const auto& iz : g.incident(x))
                if (iz.to != iy.to && detail::ll(sigma(g, x, iz.to)) >= bar)
                    ++count;
            detail::record(v, count >= delta - s, {{x, iy.to}, "#z with sigma(x,z) >= 2D-d(x)-sigma(x,y)", count,
                                                   delta - s});
        }
    return v;
}

/// Each vertex x has at least d(x) - p(x) - 1 neighbors y with
/// sigma(x,y) >= Delta - p(x) - 1.
inline lemma_verdict check_w23(const graph& g)
{
    lemma_verdict v{"w23"};
    const auto delta = detail::ll(g.max_degree());
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) == 0) {
            ++v.not_applicable;
            continue;
        }
        const auto p = p_params(g, x).p;
        long long count = 0;
        for (const auto& iy : g.incident(x))
            if (detail::ll(sigma(g, x, iy.to)) >= delta - p - 1)
                ++count;
        const auto need = detail::ll(g.degree(x)) - p - 1;
        detail::record(v, count >= need, {{x}, "#y with sigma(x,y) >= D-p(x)-1", count, need});
    }
    return v;
}

/// Delta/2 < q <= Delta - d(x)/2 - 2.
inline bool in_q_window(const graph& g, vertex_id x, const exact_real& q)
{
    const exact_real delta(detail::ll(g.max_degree()));
    return delta / 2 < q && q <= delta - exact_real::fraction(detail::ll(g.degree(x)), 2) - 2;
}

/// For each ordered edge (x, y) with q in the window of x: at least
/// Delta - sigma_q(x,y) - 2 vertices z in N(x) - y have
/// sigma_q(x,z) >= 2 Delta - d(x) - sigma_q(x,y) - 4.
inline lemma_verdict check_ppp(const graph& g, const exact_real& q, threshold t = threshold::at_least)
{
    lemma_verdict v{"ppp"};
    const auto delta = detail::ll(g.max_degree());
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        const bool window = in_q_window(g, x, q);
        for (const auto& iy : g.incident(x)) {
            if (!window) {
                ++v.not_applicable;
                continue;
            }
            const auto s = detail::ll(sigma_q(g, x, iy.to, q, t));
            const auto bar = 2 * delta - detail::ll(g.degree(x)) - s - 4;
            long long count = 0;
            for (const auto& iz : g.incident(x))
                if (iz.to != iy.to && detail::ll(sigma_q(g, x, iz.to, q, t)) >= bar)
                    ++count;
            detail::record(v, count >= delta - s - 2,
                           {{x, iy.to}, "#z with sigma_q(x,z) >= 2D-d(x)-sigma_q(x,y)-4", count, delta - s - 2});
        }
    }
    return v;
}

/// Each x with q in its window has at least d(x) - p(x,q) - 3 neighbors y
/// with sigma_q(x,y) >= Delta - p(x,q) - 5.
inline lemma_verdict check_pp(const graph& g, const exact_real& q, threshold t = threshold::at_least)
{
    lemma_verdict v{"pp"};
    const auto delta = detail::ll(g.max_degree());
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) == 0 || !in_q_window(g, x, q)) {
            ++v.not_applicable;
            continue;
        }
        const auto p = p_params_q(g, x, q, t).p;
        long long count = 0;
        for (const auto& iy : g.incident(x))
            if (detail::ll(sigma_q(g, x, iy.to, q, t)) >= delta - p - 5)
                ++count;
        const auto need = detail::ll(g.degree(x)) - p - 3;
        detail::record(v, count >= need, {{x}, "#y with sigma_q(x,y) >= D-p(x,q)-5", count, need});
    }
    return v;
}

/// The three inequalities for an uncolored edge xy, a Delta-coloring of
/// G - xy, and d(x) < q <= Delta - 1.
struct lemfact_report {
    bool applies = false;
    std::vector<vertex_id> z; // Z = {z in N(x) - y : d(z) > q, phi(xz) missing at y}
    lemma_verdict count;      // (1)
    lemma_verdict surplus;    // (2)
    lemma_verdict per_z;      // (3)

    bool holds() const { return !applies || (count.holds && surplus.holds && per_z.holds); }
};

namespace detail {

/// phi must be a proper Delta-coloring of G - xy: every other edge colored.
inline void require_coloring_of_g_minus(const edge_coloring& phi, edge_id xy, const char* who)
{
    const graph& g = phi.host();
    if (phi.palette() != g.max_degree())
        throw precondition_error(std::string(who) + ": palette must equal Delta");
    for (auto e : g.edges())
        if (phi.is_colored(e) == (e == xy))
            throw precondition_error(std::string(who) + ": coloring must leave exactly xy uncolored");
}

} // namespace detail

inline lemfact_report check_lemfact(const edge_coloring& phi, vertex_id x, vertex_id y, const exact_real& q,
                                    threshold z_rule = threshold::greater_than,
                                    threshold sigma_rule = threshold::at_least)
{
    const graph& g = phi.host();
    auto xy = g.edge_between(x, y);
    if (!xy)
        throw precondition_error("check_lemfact: xy is not an edge");
    detail::require_coloring_of_g_minus(phi, *xy, "check_lemfact");
    lemfact_report r;
    r.count.lemma = "lemfact1";
    r.surplus.lemma = "lemfact2";
    r.per_z.lemma = "lemfact3";
    const auto delta = detail::ll(g.max_degree());
    const auto dx = detail::ll(g.degree(x)), dy = detail::ll(g.degree(y));
    r.applies = exact_real(dx) < q && q <= exact_real(delta - 1);
    if (!r.applies) {
        r.count.not_applicable = r.surplus.not_applicable = r.per_z.not_applicable = 1;
        return r;
    }
    const exact_real gap = exact_real(delta) - q;
    for (const auto& i : g.incident(x)) {
        if (i.to == y)
            continue;
        if (meets(g.degree(i.to), q, z_rule) && phi.misses(y, phi[i.edge]))
            r.z.push_back(i.to);
    }
    const exact_real need1 = exact_real(delta - dy + 1) - exact_real(rational(floor_div(dx + dy - delta - 2, gap)));
    detail::record(r.count, exact_real(detail::ll(r.z.size())) >= need1,
                   {{x, y}, "|Z|", detail::ll(r.z.size()), need1});

    exact_real sum(0);
    for (auto z : r.z)
        sum += exact_real(detail::ll(g.degree(z))) - q;
    const exact_real need2 = exact_real(delta - dy + 1) * gap - dx - dy + delta + 2;
    detail::record(r.surplus, sum >= need2, {{x, y}, "sum over Z of d(z)-q", sum, need2});

    for (auto z : r.z) {
        const auto dz = detail::ll(g.degree(z));
        const exact_real need3 =
            exact_real(2 * delta - dx - dy + 1) - exact_real(rational(floor_div(dx + dy + dz - 2 * delta - 2, gap)));
        const auto s = detail::ll(sigma_q(g, x, z, q, sigma_rule));
        detail::record(r.per_z, exact_real(s) >= need3, {{x, y, z}, "sigma_q(x,z)", s, need3});
    }
    return r;
}

/// d-bar(G) >= Delta - 1 + 3/n, i.e. 2m >= (Delta - 1) n + 3.
inline lemma_verdict check_conjecture(const graph& g)
{
    lemma_verdict v{"conjecture"};
    const auto n = detail::ll(g.vertex_count()), m = detail::ll(g.edge_count());
    const auto delta = detail::ll(g.max_degree());
    const exact_real observed = exact_real::fraction(2 * m, n);
    const exact_real required = exact_real(delta - 1) + exact_real::fraction(3, n);
    detail::record(v, observed >= required, {{}, "average degree", observed, required});
    return v;
}

} // namespace critlab
