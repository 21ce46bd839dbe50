#pragma once

// Charge redistribution, the low-degree partition, and its claims, all in
// exact arithmetic over Q[sqrt 2].

#include <algorithm>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "degree_stats.hpp"
#include "exact_real.hpp"
#include "lemmas.hpp"

namespace critlab {

enum class q_branch { first, second };

struct q_value {
    exact_real q;
    q_branch branch;
};

/// (2 sqrt2 (Delta - 1) - 2) / (2 sqrt2 + 1), the irrational candidate for q.
inline exact_real q_first_term(long long delta)
{
    const exact_real r2 = exact_real::sqrt2();
    return (2 * r2 * exact_real(delta - 1) - 2) / (2 * r2 + 1);
}

/// q = min of the two candidates; `branch` says which one won (first on ties).
inline q_value q_of(long long delta)
{
    if (delta < 56)
        throw precondition_error("q_of: Delta must be at least 56");
    exact_real a = q_first_term(delta);
    exact_real b = exact_real::fraction(3 * delta, 4) - 2;
    if (a <= b)
        return {a, q_branch::first};
    return {b, q_branch::second};
}

struct transfer {
    vertex_id donor;
    vertex_id recipient;
    exact_real amount;
};

struct charge_ledger {
    exact_real q;
    std::vector<long long> initial;  // M(x) = d(x)
    std::vector<exact_real> final;   // M'(x)
    std::vector<transfer> transfers;

    exact_real total() const
    {
        exact_real s(0);
        for (const auto& x : final)
            s += x;
        return s;
    }
};

/// Every (>q)-vertex splits d(y) - q evenly among its (<q)-neighbors. A donor
/// with no such neighbor keeps its charge.
inline charge_ledger discharge(const graph& g, const exact_real& q)
{
    if (q.sign() <= 0)
        throw precondition_error("discharge: q must be positive");
    charge_ledger out;
    out.q = q;
    const auto n = g.vertex_count();
    out.initial.resize(n);
    out.final.resize(n);
    for (vertex_id v = 0; v < n; ++v) {
        out.initial[v] = static_cast<long long>(g.degree(v));
        out.final[v] = exact_real(out.initial[v]);
    }
    for (vertex_id y = 0; y < n; ++y) {
        const exact_real dy(static_cast<long long>(g.degree(y)));
        if (!(dy > q))
            continue;
        std::vector<vertex_id> low;
        for (const auto& i : g.incident(y))
            if (exact_real(static_cast<long long>(g.degree(i.to))) < q)
                low.push_back(i.to);
        if (low.empty())
            continue;
        const exact_real share = (dy - q) / exact_real(static_cast<long long>(low.size()));
        for (auto x : low) {
            out.final[x] += share;
            out.final[y] -= share;
            out.transfers.push_back({y, x, share});
        }
    }
    return out;
}

struct partition_report {
    exact_real q;
    long long c = 0;
    std::vector<vertex_id> x1;   // d(x) <= 3q - 2 Delta
    std::vector<vertex_id> nx1;  // union of N(x) over X1
    std::vector<vertex_id> z1;   // outside X1 + N(X1), d >= Delta - c
    std::vector<vertex_id> z2;   // outside X1 + N(X1), d < Delta - c
    exact_real b1;
    exact_real b2;
};

inline partition_report partition(const graph& g, const exact_real& q, long long c)
{
    if (c <= 0)
        throw precondition_error("partition: c must be positive");
    partition_report r;
    r.q = q;
    r.c = c;
    const auto n = g.vertex_count();
    const auto delta = static_cast<long long>(g.max_degree());
    const exact_real low = 3 * q - 2 * exact_real(delta);
    std::vector<char> in_x1(n, 0), in_n(n, 0);
    for (vertex_id v = 0; v < n; ++v)
        if (exact_real(static_cast<long long>(g.degree(v))) <= low) {
            in_x1[v] = 1;
            r.x1.push_back(v);
        }
    for (auto x : r.x1)
        for (const auto& i : g.incident(x))
            in_n[i.to] = 1;
    for (vertex_id v = 0; v < n; ++v) {
        if (in_n[v])
            r.nx1.push_back(v);
        if (in_x1[v] || in_n[v])
            continue;
        if (static_cast<long long>(g.degree(v)) >= delta - c)
            r.z1.push_back(v);
        else
            r.z2.push_back(v);
    }
    auto sz = [](const auto& s) { return exact_real(static_cast<long long>(s.size())); };
    const exact_real head = (2 + 2 * (exact_real(delta) - q)) * sz(r.x1);
    r.b1 = head + q * sz(r.nx1) + exact_real(delta - c) * sz(r.z1) + low * sz(r.z2);
    r.b2 = head + (exact_real(static_cast<long long>(n)) - sz(r.x1)) * q;
    return r;
}

/// Claim 5's coefficient ((5c+2) Delta - (6c+3) q + 3c + 2) / (c Delta).
inline exact_real claim5_ratio(long long delta, const exact_real& q, long long c)
{
    return (exact_real((5 * c + 2) * delta) - exact_real(6 * c + 3) * q + exact_real(3 * c + 2)) /
           exact_real(c * delta);
}

/// Claims 1, 2, 3 and 5 evaluated on g. They are theorems only for critical
/// graphs with the standard q; elsewhere they are plain predicates.
inline std::vector<lemma_verdict> verify_claims(const graph& g, const exact_real& q, long long c)
{
    const auto ledger = discharge(g, q);
    const auto part = partition(g, q, c);
    const auto delta = static_cast<long long>(g.max_degree());
    const exact_real gap = exact_real(delta) - q;
    std::vector<lemma_verdict> out;

    lemma_verdict c1{"claim1"};
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        const exact_real dx(static_cast<long long>(g.degree(x)));
        if (!(dx <= gap + 2)) {
            ++c1.not_applicable;
            continue;
        }
        const exact_real need = dx + 2 * gap;
        detail::record(c1, ledger.final[x] >= need, {{x}, "M'(x)", ledger.final[x], need});
    }
    out.push_back(std::move(c1));

    lemma_verdict c2{"claim2"};
    std::vector<char> in_x1(g.vertex_count(), 0);
    for (auto x : part.x1)
        in_x1[x] = 1;
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        if (in_x1[x]) {
            ++c2.not_applicable;
            continue;
        }
        detail::record(c2, ledger.final[x] >= q, {{x}, "M'(x)", ledger.final[x], q});
    }
    out.push_back(std::move(c2));

    lemma_verdict c3{"claim3"};
    for (auto y : part.nx1) {
        const exact_real dy(static_cast<long long>(g.degree(y)));
        detail::record(c3, dy > q, {{y}, "d(y) for y in N(X1), strictly above", dy, q});
    }
    {
        const auto got = static_cast<long long>(part.nx1.size());
        const auto need = 2 * static_cast<long long>(part.x1.size());
        detail::record(c3, got >= need, {part.x1, "|N(X1)|", got, need});
    }
    out.push_back(std::move(c3));

    lemma_verdict c5{"claim5"};
    {
        const exact_real need = claim5_ratio(delta, q, c) * exact_real(static_cast<long long>(part.nx1.size()));
        const exact_real got(static_cast<long long>(part.z1.size()));
        detail::record(c5, got >= need, {part.z1, "|Z1(c)|", got, need});
    }
    out.push_back(std::move(c5));
    return out;
}

struct claim4_report {
    std::vector<vertex_id> y;   // Y(x, phi)
    std::vector<vertex_id> y1;  // Y meet N(X1)
    std::vector<vertex_id> y2;  // Y minus (X1 + N(X1))
    bool size_identity = false; // |Y| = Delta - d(x) + 1
    long long required = 0;     // Delta - 2 d(x) + 3
    bool holds = false;         // |Y2| >= required
};

/// The Y-sets for an uncolored edge xy under a Delta-coloring of G - xy,
/// with X1 taken from threshold q.
inline claim4_report claim4_y_sets(const edge_coloring& phi, vertex_id x, vertex_id y, const exact_real& q)
{
    const graph& g = phi.host();
    auto xy = g.edge_between(x, y);
    if (!xy)
        throw precondition_error("claim4_y_sets: xy is not an edge");
    detail::require_coloring_of_g_minus(phi, *xy, "claim4_y_sets");
    const auto delta = static_cast<long long>(g.max_degree());
    const exact_real low = 3 * q - 2 * exact_real(delta);
    std::vector<char> in_x1(g.vertex_count(), 0), in_n(g.vertex_count(), 0);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (exact_real(static_cast<long long>(g.degree(v))) <= low)
            in_x1[v] = 1;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (in_x1[v])
            for (const auto& i : g.incident(v))
                in_n[i.to] = 1;
    claim4_report r;
    for (const auto& i : g.incident(y)) {
        if (i.to == x || !phi.misses(x, phi[i.edge]))
            continue;
        r.y.push_back(i.to);
        if (in_n[i.to])
            r.y1.push_back(i.to);
        if (!in_x1[i.to] && !in_n[i.to])
            r.y2.push_back(i.to);
    }
    const auto dx = static_cast<long long>(g.degree(x));
    r.size_identity = static_cast<long long>(r.y.size()) == delta - dx + 1;
    r.required = delta - 2 * dx + 3;
    r.holds = static_cast<long long>(r.y2.size()) >= r.required;
    return r;
}

} // namespace critlab
