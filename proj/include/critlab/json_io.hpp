#pragma once

// JSON renderings for trace and CLI output.

#include <json.hpp>

#include "bounds.hpp"
#include "discharging.hpp"
#include "fan.hpp"
#include "lemmas.hpp"
#include "prune.hpp"

namespace critlab {

using json = nlohmann::ordered_json;

inline json to_json(const exact_real& x, unsigned digits = 10)
{
    return json{{"exact", x.str()}, {"decimal", x.to_decimal(digits)}};
}

inline json to_json(const edge_coloring& phi)
{
    const graph& g = phi.host();
    json edges = json::array();
    for (auto e : g.edges()) {
        auto [u, v] = g.ends(e);
        json c = phi.is_colored(e) ? json(phi[e]) : json(nullptr);
        edges.push_back({{"u", u}, {"v", v}, {"color", c}});
    }
    return json{{"k", phi.palette()}, {"edges", edges}};
}

inline json to_json(const fan_tree& t, const edge_coloring& phi)
{
    const graph& g = phi.host();
    json edges = json::array(), colors = json::array();
    for (auto e : t.edges) {
        auto [u, v] = g.ends(e);
        edges.push_back({u, v});
        colors.push_back(phi.is_colored(e) ? json(phi[e]) : json(nullptr));
    }
    return json{{"kind", to_string(t.kind)}, {"vertices", t.vertices}, {"edges", edges}, {"colors", colors}};
}

inline json to_json(const lemma_witness& w)
{
    return json{{"vertices", w.vertices},
                {"quantity", w.quantity},
                {"observed", w.observed.str()},
                {"required", w.required.str()}};
}

inline json to_json(const lemma_verdict& v)
{
    json j{{"lemma", v.lemma}, {"holds", v.holds}, {"checked", v.checked}, {"not_applicable", v.not_applicable}};
    if (v.witness)
        j["witness"] = to_json(*v.witness);
    return j;
}

inline json to_json(const certificate& c)
{
    json j{{"reason", to_string(c.reason)}, {"rule", c.rule}, {"vertices", c.vertices}};
    if (c.edge && c.coloring) {
        auto [u, v] = c.coloring->host().ends(*c.edge);
        j["edge"] = {u, v};
    }
    if (c.q)
        j["q"] = c.q->str();
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    if (c.structure && c.coloring)
        j["structure"] = to_json(*c.structure, *c.coloring);
    if (c.coloring)
        j["coloring"] = to_json(*c.coloring);
    return j;
}

inline json to_json(const charge_ledger& l)
{
    json verts = json::array();
    for (std::size_t v = 0; v < l.final.size(); ++v)
        verts.push_back({{"vertex", v}, {"M", l.initial[v]}, {"M_final", l.final[v].str()}});
    return json{{"q", l.q.str()}, {"total", l.total().str()}, {"vertices", verts}};
}

inline json to_json(const partition_report& p)
{
    return json{{"q", p.q.str()}, {"c", p.c},   {"X1", p.x1},       {"N_X1", p.nx1},
                {"Z1", p.z1},     {"Z2", p.z2}, {"b1", p.b1.str()}, {"b2", p.b2.str()}};
}

inline json to_json(const chain_report& r)
{
    json j{{"delta", r.delta},
           {"c", r.c},
           {"q", to_json(r.q.q)},
           {"q_branch", r.q.branch == q_branch::first ? "first" : "second"},
           {"q_star", to_json(r.q_star)},
           {"a", to_json(r.a)},
           {"slack", to_json(r.slack)},
           {"route", r.route == chain_route::first ? "first" : "second"}};
    if (r.error) {
        j["error"] = *r.error;
        return j;
    }
    j["f"] = to_json(r.f);
    j["f_prime"] = to_json(r.f_prime);
    j["f1"] = to_json(r.f1);
    j["f2"] = to_json(r.f2);
    j["bound"] = to_json(r.bound);
    j["relaxed"] = to_json(r.relaxed);
    return j;
}

} // namespace critlab
