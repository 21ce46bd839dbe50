#pragma once

// Non-criticality certificates from lemma violations, cheapest checks first.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "discharging.hpp"
#include "fan.hpp"
#include "lemmas.hpp"
#include "solver.hpp"

namespace critlab {

enum class cert_reason { disconnected, degree_sum, val, w22, w23, p4, broom, lemfact, claim4 };

inline const char* to_string(cert_reason r)
{
    switch (r) {
    case cert_reason::disconnected:
        return "disconnected";
    case cert_reason::degree_sum:
        return "degree-sum";
    case cert_reason::val:
        return "val";
    case cert_reason::w22:
        return "w22";
    case cert_reason::w23:
        return "w23";
    case cert_reason::p4:
        return "p4-violation";
    case cert_reason::broom:
        return "broom-violation";
    case cert_reason::lemfact:
        return "lemfact-violation";
    case cert_reason::claim4:
        return "claim4-violation";
    }
    return "?";
}

/// Proof that a graph is not edge-Delta-critical. Coloring-based
/// certificates carry a Delta-coloring of G - edge on the original graph,
/// which must outlive the certificate.
struct certificate {
    certificate() = default;
    certificate(cert_reason r, std::string why, std::vector<vertex_id> vs = {})
        : reason(r), rule(std::move(why)), vertices(std::move(vs))
    {
    }

    cert_reason reason = cert_reason::degree_sum;
    std::string rule; // finer label, e.g. "p4(4)" or "lemfact2"
    std::vector<vertex_id> vertices;
    std::optional<edge_id> edge;
    std::optional<edge_coloring> coloring;
    std::optional<fan_tree> structure;
    std::optional<exact_real> q;
    std::optional<lemma_witness> witness;
};

struct prune_options {
    solve_budget budget;
    std::size_t colorings_per_edge = 32;
    std::size_t exhaustive_cap = 20000;
    std::uint64_t seed = 0;
    /// Off by default: the Y-set bound is only proved for thresholds near
    /// 3 Delta / 4 and above, so a small synthetic q can flag critical graphs.
    bool claim4 = false;
    std::optional<exact_real> claim4_q;
};

struct prune_result {
    std::optional<certificate> cert;
    bool inconclusive = false; // a solve ran out of budget
    std::size_t colorings_tried = 0;
    std::size_t edges_skipped = 0; // G - e not Delta-colorable, so no coloring to probe
};

namespace detail {

/// All probes on one coloring of G - xy, both orientations of the edge.
inline std::optional<certificate> probe_coloring(const edge_coloring& phi, edge_id e, const prune_options& opt)
{
    const graph& g = phi.host();
    const auto delta = static_cast<long long>(g.max_degree());
    auto make = [&](cert_reason r, std::string rule, std::vector<vertex_id> vs) {
        certificate c;
        c.reason = r;
        c.rule = std::move(rule);
        c.vertices = std::move(vs);
        c.edge = e;
        c.coloring = phi;
        return c;
    };
    const auto [u, v] = g.ends(e);
    if (phi.missing(u).intersects(phi.missing(v)))
        return make(cert_reason::p4, "p4(1)", {u, v});
    for (int side = 0; side < 2; ++side) {
        const vertex_id x = side == 0 ? u : v, y = side == 0 ? v : u;
        for (const auto& k : enumerate_kierstead_paths(phi, x, y, 3)) {
            if (k.edges.size() != 3)
                continue;
            auto pv = check_p4(phi, k);
            for (std::size_t i = 0; i < 4; ++i)
                if (pv.items[i].applies && !pv.items[i].holds) {
                    auto c = make(cert_reason::p4, "p4(" + std::to_string(i + 1) + ")", pv.items[i].vertices);
                    c.structure = k;
                    return c;
                }
        }
        for (const auto& b : enumerate_simple_brooms(phi, x, y)) {
            auto bv = check_broom(phi, b);
            if (!bv.holds()) {
                auto c = make(cert_reason::broom, "broom", {bv.elementary.u, bv.elementary.v});
                c.structure = b;
                return c;
            }
        }
        for (long long qi = static_cast<long long>(g.degree(x)) + 1; qi <= delta - 1; ++qi) {
            auto lf = check_lemfact(phi, x, y, exact_real(qi));
            for (const auto* part : {&lf.count, &lf.surplus, &lf.per_z})
                if (!part->holds) {
                    auto c = make(cert_reason::lemfact, part->lemma, {x, y});
                    c.q = exact_real(qi);
                    c.witness = part->witness;
                    return c;
                }
        }
        if (opt.claim4 && opt.claim4_q && delta >= 6) {
            const exact_real& q = *opt.claim4_q;
            if (exact_real(static_cast<long long>(g.degree(x))) <= 3 * q - 2 * exact_real(delta)) {
                auto r4 = claim4_y_sets(phi, x, y, q);
                if (!r4.holds) {
                    auto c = make(cert_reason::claim4, "claim4", {x, y});
                    c.q = q;
                    c.witness = lemma_witness{r4.y2, "|Y2|", static_cast<long long>(r4.y2.size()), r4.required};
                    return c;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Colorings of G - e to probe: every one when Delta <= 4 and n <= 8 (up to
/// a cap), otherwise the solver's coloring plus Kempe-walk perturbations.
inline std::vector<edge_coloring> probe_colorings(const edge_coloring& seed, edge_id e, std::size_t per_edge,
                                                  std::size_t exhaustive_cap, std::uint64_t rng_seed)
{
    const graph& g = seed.host();
    if (g.max_degree() <= 4 && g.vertex_count() <= 8) {
        std::vector<edge_coloring> all;
        enumerate_colorings(
            g, seed.palette(), e,
            [&](const edge_coloring& phi) {
                all.push_back(phi);
                return true;
            },
            exhaustive_cap);
        return all;
    }
    std::mt19937_64 rng(rng_seed ^ (0x9e3779b97f4a7c15ULL * (e + 1)));
    return sample_colorings(seed, per_edge, rng);
}

/// Returns a certificate when some lemma fails; no certificate is not a proof
/// of criticality.
inline prune_result prune(const graph& g, const prune_options& opt = {})
{
    if (g.edge_count() == 0)
        throw precondition_error("prune: graph has no edges");
    prune_result out;
    const auto delta = g.max_degree();

    if (!is_connected(g)) {
        out.cert = certificate{cert_reason::disconnected, "disconnected"};
        return out;
    }
    for (auto e : g.edges()) {
        auto [x, y] = g.ends(e);
        if (g.degree(x) + g.degree(y) < delta + 2) {
            out.cert = certificate{cert_reason::degree_sum, "degree-sum", {x, y}};
            out.cert->edge = e;
            return out;
        }
    }
    for (auto [check, reason] : {std::pair{&check_val, cert_reason::val}, std::pair{&check_w22, cert_reason::w22},
                                 std::pair{&check_w23, cert_reason::w23}}) {
        auto v = check(g);
        if (!v.holds) {
            out.cert = certificate{reason, v.lemma, v.witness->vertices};
            out.cert->witness = v.witness;
            return out;
        }
    }

    const auto k = static_cast<color>(delta);
    auto whole = is_k_edge_colorable(g, k, opt.budget);
    if (whole.outcome == decision::budget_exhausted) {
        out.inconclusive = true;
        return out;
    }
    if (whole.outcome == decision::yes) {
        // Uncoloring any edge of a Delta-coloring leaves its color missing at both ends.
        edge_coloring phi = *whole.coloring;
        const edge_id e = g.edges().front();
        phi.uncolor(e);
        out.colorings_tried = 1;
        out.cert = detail::probe_coloring(phi, e, opt);
        return out;
    }
    for (auto e : g.edges()) {
        auto r = is_k_edge_colorable(g, k, opt.budget, e);
        if (r.outcome == decision::budget_exhausted) {
            out.inconclusive = true;
            continue;
        }
        if (r.outcome == decision::no) {
            ++out.edges_skipped;
            continue;
        }
        for (const auto& phi : probe_colorings(*r.coloring, e, opt.colorings_per_edge, opt.exhaustive_cap, opt.seed)) {
            ++out.colorings_tried;
            if (auto c = detail::probe_coloring(phi, e, opt)) {
                out.cert = std::move(c);
                return out;
            }
        }
    }
    return out;
}

/// Recheck a certificate from scratch against g.
inline bool verify_certificate(const graph& g, const certificate& c)
{
    const auto delta = g.max_degree();
    switch (c.reason) {
    case cert_reason::disconnected:
        return !is_connected(g);
    case cert_reason::degree_sum:
        return c.vertices.size() == 2 && g.adjacent(c.vertices[0], c.vertices[1]) &&
               g.degree(c.vertices[0]) + g.degree(c.vertices[1]) < delta + 2;
    case cert_reason::val:
        return !check_val(g).holds;
    case cert_reason::w22:
        return !check_w22(g).holds;
    case cert_reason::w23:
        return !check_w23(g).holds;
    default:
        break;
    }
    if (!c.coloring || !c.edge || &c.coloring->host() != &g || !g.has_edge_id(*c.edge))
        return false;
    const edge_coloring& phi = *c.coloring;
    if (phi.palette() != delta || !is_proper(g, phi.raw(), phi.palette()))
        return false;
    for (auto e : g.edges())
        if (phi.is_colored(e) == (e == *c.edge))
            return false;
    const auto [u, v] = g.ends(*c.edge);
    try {
        switch (c.reason) {
        case cert_reason::p4: {
            if (c.rule == "p4(1)")
                return phi.missing(u).intersects(phi.missing(v));
            if (!c.structure || c.structure->edges.front() != *c.edge)
                return false;
            auto pv = check_p4(phi, *c.structure);
            const std::size_t i = static_cast<std::size_t>(c.rule.at(3) - '1');
            return i < 4 && pv.items[i].applies && !pv.items[i].holds;
        }
        case cert_reason::broom:
            return c.structure && c.structure->edges.front() == *c.edge && !check_broom(phi, *c.structure).holds();
        case cert_reason::lemfact: {
            if (!c.q || c.vertices.size() < 2)
                return false;
            auto lf = check_lemfact(phi, c.vertices[0], c.vertices[1], *c.q);
            if (c.rule == "lemfact1")
                return lf.applies && !lf.count.holds;
            if (c.rule == "lemfact2")
                return lf.applies && !lf.surplus.holds;
            return lf.applies && !lf.per_z.holds;
        }
        case cert_reason::claim4:
            return c.q && c.vertices.size() == 2 && !claim4_y_sets(phi, c.vertices[0], c.vertices[1], *c.q).holds;
        default:
            return false;
        }
    } catch (const precondition_error&) {
        return false;
    }
}

} // namespace critlab
