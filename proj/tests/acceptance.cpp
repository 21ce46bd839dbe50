// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "critlab/critlab.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail << "first problem: " << what << "; ";
        }
    }
};

int failures = 0;

void run(int id, const std::string& name, const std::function<void(outcome&)>& body)
{
    outcome o;
    const auto t0 = clock_type::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    std::printf("%s [%d] %s (%s%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
}

graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<vertex_id, vertex_id>> e;
    for (vertex_id i = 0; i < n; ++i)
        for (vertex_id j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return graph(n, e);
}

/// Colors appear in increasing order along edge ids: one representative per
/// renaming class. Every structure checked below is invariant under renaming.
bool canonical_labels(const edge_coloring& phi)
{
    color next = 1;
    for (auto e : phi.host().edges()) {
        if (!phi.is_colored(e))
            continue;
        const color c = phi[e];
        if (c > next)
            return false;
        if (c == next)
            ++next;
    }
    return true;
}

/// Colorings of G - e used by the elementarity suites: every one up to
/// renaming when Delta <= 4 and n <= 8, otherwise at least 32 Kempe-walk
/// samples (all of them when fewer exist).
std::vector<edge_coloring> suite_colorings(const graph& g, edge_id e, std::uint64_t seed, bool& exhaustive)
{
    const auto k = static_cast<color>(g.max_degree());
    std::vector<edge_coloring> out;
    exhaustive = g.max_degree() <= 4 && g.vertex_count() <= 8;
    if (!exhaustive) {
        auto r = is_k_edge_colorable(g, k, {}, e);
        if (r.outcome != decision::yes)
            return out;
        std::mt19937_64 rng(seed);
        out = sample_colorings(*r.coloring, 48, rng);
        if (out.size() >= 32)
            return out;
        out.clear();
        exhaustive = true;
    }
    enumerate_colorings(g, k, e, [&](const edge_coloring& phi) {
        if (canonical_labels(phi))
            out.push_back(phi);
        return true;
    });
    return out;
}

std::vector<graph> build_corpus(std::size_t max_n)
{
    std::vector<graph> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto& g : all_connected_graphs(n))
            if (g.edge_count() > 0 && is_edge_delta_critical(g).is_critical)
                out.push_back(std::move(g));
    return out;
}

} // namespace

int main()
{
    // 1. Solver against the line-graph oracle on every graph with n <= 7.
    run(1, "chromatic index agrees with line-graph oracle, all graphs n<=7", [](outcome& o) {
        const auto t0 = clock_type::now();
        std::size_t count = 0;
        for (std::size_t n = 1; n <= 7; ++n)
            for (const auto& g : all_graphs(n)) {
                ++count;
                auto r = chromatic_index(g);
                const int want = oracle::line_graph_chromatic_number(oracle::edges_of(g));
                o.require(r.value.has_value() && static_cast<int>(*r.value) == want, "mismatch on " + write_graph6(g));
                if (g.edge_count() > 0)
                    o.require(r.coloring && is_proper(g, r.coloring->raw(), static_cast<color>(want), true),
                              "bad coloring on " + write_graph6(g));
            }
        const double secs = seconds_since(t0);
        o.require(count == 1252, "expected 1252 graphs, saw " + std::to_string(count));
        o.require(secs < 60, "took longer than 60 s");
        o.detail << count << " graphs; ";
    });

    // 2. Known chromatic indices.
    run(2, "known chromatic indices K4 K5 C5 C6 Petersen", [](outcome& o) {
        const auto t0 = clock_type::now();
        const std::pair<const char*, std::pair<graph, std::size_t>> cases[] = {
            {"K4", {complete(4), 3}}, {"K5", {complete(5), 5}}, {"C5", {cycle(5), 3}},
            {"C6", {cycle(6), 2}},    {"Petersen", {petersen(), 4}}};
        for (const auto& [name, c] : cases) {
            const auto& [g, want] = c;
            auto r = chromatic_index(g);
            o.require(r.value == want, std::string(name) + " value");
            o.require(r.coloring && r.coloring->palette() == want && is_proper(g, r.coloring->raw(), static_cast<color>(want), true),
                      std::string(name) + " certificate");
            if (want == g.max_degree() + 1)
                o.require(is_k_edge_colorable(g, static_cast<color>(want - 1)).outcome == decision::no,
                          std::string(name) + " should not be Delta-colorable");
        }
        o.require(seconds_since(t0) < 10, "took longer than 10 s");
    });

    const auto corpus_t0 = clock_type::now();
    const std::vector<graph> corpus = build_corpus(8);
    const double corpus_secs = seconds_since(corpus_t0);

    // 3. The critical corpus.
    run(3, "critical corpus over connected n<=8: odd cycles present, VAL/w22/w23/conjecture hold", [&](outcome& o) {
        for (std::size_t len : {3u, 5u, 7u}) {
            bool found = false;
            for (const auto& g : corpus)
                found |= isomorphic(g, cycle(len));
            o.require(found, "C" + std::to_string(len) + " missing");
        }
        for (const auto& g : corpus) {
            const auto s = write_graph6(g);
            o.require(check_val(g).holds, "VAL fails on " + s);
            o.require(check_w22(g).holds, "w22 fails on " + s);
            o.require(check_w23(g).holds, "w23 fails on " + s);
            o.require(check_conjecture(g).holds, "conjecture bound fails on " + s);
        }
        o.require(corpus_secs < 1800, "corpus build over 30 min");
        o.detail << corpus.size() << " critical graphs, built in " << corpus_secs << " s; ";
    });

    // 4. Elementarity suites over colorings of G - e.
    run(4, "fans, 4-vertex Kierstead paths, brooms and lemfact hold on the corpus", [&](outcome& o) {
        std::size_t colorings = 0, fans = 0, paths = 0, brooms = 0, broom_applied = 0, lemfact = 0, exhaustive_edges = 0,
                    sampled_edges = 0;
        std::uint64_t seed = 1;
        for (const auto& g : corpus) {
            const auto s = write_graph6(g);
            const auto delta = static_cast<long long>(g.max_degree());
            for (auto e : g.edges()) {
                bool exhaustive = false;
                auto phis = suite_colorings(g, e, seed++, exhaustive);
                (exhaustive ? exhaustive_edges : sampled_edges) += 1;
                o.require(!phis.empty(), "no coloring of G - e on " + s);
                o.require(exhaustive || phis.size() >= 32, "fewer than 32 samples on " + s);
                const auto [u, v] = g.ends(e);
                for (const auto& phi : phis) {
                    ++colorings;
                    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
                        ++fans;
                        o.require(is_elementary(phi, build_vizing_fan(phi, x, y).vertices).elementary,
                                  "Vizing fan not elementary on " + s);
                        for (const auto& k : enumerate_kierstead_paths(phi, x, y, 3)) {
                            if (k.edges.size() != 3)
                                continue;
                            ++paths;
                            o.require(check_p4(phi, k).all_hold(), "Kierstead path item fails on " + s);
                        }
                        for (const auto& b : enumerate_simple_brooms(phi, x, y)) {
                            ++brooms;
                            auto bv = check_broom(phi, b);
                            broom_applied += bv.applies;
                            o.require(bv.holds(), "broom not elementary on " + s);
                        }
                        for (long long q = static_cast<long long>(g.degree(x)) + 1; q <= delta - 1; ++q) {
                            auto lf = check_lemfact(phi, x, y, exact_real(q));
                            lemfact += lf.applies;
                            o.require(lf.holds(), "lemfact fails on " + s + " q=" + std::to_string(q));
                        }
                    }
                }
            }
        }
        o.require(paths > 0 && broom_applied > 0 && lemfact > 0, "a suite never applied");
        o.detail << colorings << " colorings (" << exhaustive_edges << " edges exhaustive, " << sampled_edges
                 << " sampled), " << fans << " fans, " << paths << " paths, " << broom_applied << "/" << brooms
                 << " brooms applicable, " << lemfact << " lemfact instances; ";
    });

    // 5. Kempe chains.
    run(5, "Kempe flip involution, properness, endpoint exchange over 10^4 trials", [](outcome& o) {
        std::mt19937_64 rng(2024);
        std::size_t trials = 0;
        while (trials < 10000) {
            auto g = random_graph(4 + rng() % 10, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
            if (g.max_degree() < 2)
                continue;
            auto phi = vizing_color(g);
            // Leave a few edges uncolored so chains end at free colors too.
            for (auto e : g.edges())
                if (rng() % 5 == 0)
                    phi.uncolor(e);
            const auto k = phi.palette();
            const vertex_id v = static_cast<vertex_id>(rng() % g.vertex_count());
            const color a = static_cast<color>(1 + rng() % k);
            color b = static_cast<color>(1 + rng() % k);
            if (a == b)
                continue;
            ++trials;
            auto ch = find_kempe_chain(phi, v, a, b);
            auto once = kempe_flip(phi, ch);
            o.require(is_proper(once), "flip broke properness");
            auto back = kempe_flip(once, find_kempe_chain(once, v, a, b));
            o.require(back.raw() == phi.raw(), "flip is not an involution");
            for (vertex_id w = 0; w < g.vertex_count(); ++w) {
                const bool is_end = std::find(ch.ends.begin(), ch.ends.end(), w) != ch.ends.end();
                const auto before = phi.missing(w), after = once.missing(w);
                if (!is_end || ch.degenerate()) {
                    o.require(before.members() == after.members(), "missing set changed off the chain ends");
                    continue;
                }
                // At an end exactly one of a, b is missing, and the flip swaps which.
                o.require(before.contains(a) != before.contains(b), "chain end misses both or neither color");
                o.require(after.contains(a) == before.contains(b) && after.contains(b) == before.contains(a),
                          "end missing colors not exchanged");
            }
        }
        o.detail << trials << " trials; ";
    });

    // 6. Discharging conserves charge.
    run(6, "discharge conserves total charge on 10^4 random graphs; K1,3 with q=2", [](outcome& o) {
        std::mt19937_64 rng(77);
        for (int t = 0; t < 10000; ++t) {
            auto g = random_graph(2 + rng() % 18, 0.05 + 0.05 * static_cast<double>(rng() % 15), rng);
            const auto q = exact_real::fraction(1 + static_cast<long long>(rng() % 97), 1 + static_cast<long long>(rng() % 13));
            auto l = discharge(g, q);
            o.require(l.total() == exact_real(2 * static_cast<long long>(g.edge_count())), "sum of M' differs from 2m");
        }
        auto l = discharge(star(3), exact_real(2));
        o.require(l.final[0] == exact_real(2), "center charge");
        for (vertex_id v = 1; v <= 3; ++v)
            o.require(l.final[v] == exact_real::fraction(4, 3), "leaf charge");
    });

    // 7. Bound arithmetic.
    run(7, "published bound values, q branch flip, beats (2/3)(D+2), derivation chain", [](outcome& o) {
        const auto t0 = clock_type::now();
        const std::pair<long long, const char*> pub[] = {{66, "45.54248"}, {65, "44.89838"}, {56, "38.67351"}};
        for (auto [d, want] : pub) {
            const auto v = bound_theorem1(d).value;
            o.require(abs(v - exact_real::parse(want)) <= exact_real::fraction(1, 100000),
                      "value at " + std::to_string(d));
        }
        for (long long d = 56; d <= 200; ++d)
            o.require(q_of(d).branch == (d >= 66 ? q_branch::first : q_branch::second),
                      "q branch at " + std::to_string(d));
        for (long long d = 56; d <= 10000; ++d)
            o.require(bound_theorem1(d).beats_two_thirds, "(2/3)(D+2) at " + std::to_string(d));
        std::string worst_gap;
        exact_real worst(0);
        for (long long d = 56; d <= 70; ++d) {
            auto r = bound_chain(d, 18);
            o.require(!r.error, "chain error at " + std::to_string(d));
            const auto pubv = bound_theorem1(d).value;
            o.require(r.bound >= pubv - exact_real::fraction(1, 1000), "chain below published line at " + std::to_string(d));
            const auto gap = abs(r.bound - pubv);
            if (gap > worst) {
                worst = gap;
                worst_gap = std::to_string(d);
            }
        }
        o.require(seconds_since(t0) < 5, "took longer than 5 s");
        o.detail << "chain never below the published lines; largest two-sided gap " << worst.to_decimal(5)
                 << " at Delta=" << worst_gap << "; ";
    });

    // 8. Woodall's example.
    run(8, "Woodall (6,3): average degree 16/3, cheap lemmas pass, not critical, coloring certificate", [](outcome& o) {
        const auto t0 = clock_type::now();
        auto g = woodall_example(6, 3);
        const auto delta = static_cast<long long>(g.max_degree());
        const auto avg = exact_real::fraction(2 * static_cast<long long>(g.edge_count()), static_cast<long long>(g.vertex_count()));
        o.require(avg == exact_real::fraction(16, 3), "average degree");
        o.require(avg == exact_real::fraction(2 * (delta + 2), 3), "average degree is (2/3)(D+2)");
        o.require(is_connected(g), "connected");
        for (auto e : g.edges())
            o.require(g.degree(g.ends(e).u) + g.degree(g.ends(e).v) >= g.max_degree() + 2, "degree-sum");
        o.require(check_val(g).holds && check_w22(g).holds && check_w23(g).holds, "cheap lemma fails");
        auto v = is_edge_delta_critical(g);
        o.require(!v.exhausted && !v.is_critical, "criticality");
        auto r = prune(g);
        o.require(r.cert.has_value(), "no certificate");
        if (r.cert) {
            const auto reason = r.cert->reason;
            o.require(reason == cert_reason::p4 || reason == cert_reason::broom || reason == cert_reason::lemfact ||
                          reason == cert_reason::claim4,
                      "certificate is not coloring-dependent");
            o.require(verify_certificate(g, *r.cert), "certificate does not re-verify");
            o.detail << "certificate " << r.cert->rule << "; ";
        }
        o.detail << "chi'=" << (v.chi_prime ? std::to_string(*v.chi_prime) : "?") << "; ";
        o.require(seconds_since(t0) < 300, "took longer than 5 min");
    });

    // 9. The pruner never flags a critical graph.
    run(9, "prune emits no certificate on the corpus or on 10^4 perturbed colorings", [&](outcome& o) {
        for (const auto& g : corpus) {
            auto r = prune(g);
            o.require(!r.cert, "certificate on critical " + write_graph6(g));
        }
        std::mt19937_64 rng(99);
        std::size_t probed = 0;
        const prune_options opt;
        while (probed < 10000) {
            const auto& g = corpus[rng() % corpus.size()];
            const auto edges = g.edges();
            const edge_id e = edges[rng() % edges.size()];
            auto r = is_k_edge_colorable(g, static_cast<color>(g.max_degree()), {}, e);
            if (r.outcome != decision::yes) {
                o.require(false, "critical edge without a Delta-coloring of G - e");
                break;
            }
            auto phis = sample_colorings(*r.coloring, 64, rng);
            for (const auto& phi : phis) {
                if (probed >= 10000)
                    break;
                ++probed;
                o.require(!detail::probe_coloring(phi, e, opt), "probe certificate on critical " + write_graph6(g));
            }
        }
        o.detail << corpus.size() << " graphs, " << probed << " perturbed colorings; ";
    });

    return failures == 0 ? 0 : 1;
}
