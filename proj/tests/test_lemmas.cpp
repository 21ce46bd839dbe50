#include <gtest/gtest.h>

#include <random>

#include "critlab/graph6.hpp"
#include "critlab/enumerate.hpp"
#include "critlab/lemmas.hpp"
#include "critlab/solver.hpp"

using namespace critlab;

namespace {

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

const std::vector<graph>& critical_up_to_7()
{
    static const std::vector<graph> corpus = [] {
        std::vector<graph> out;
        for (std::size_t n = 3; n <= 7; ++n)
            for (auto& g : all_connected_graphs(n))
                if (g.edge_count() > 0 && is_edge_delta_critical(g).is_critical)
                    out.push_back(std::move(g));
        return out;
    }();
    return corpus;
}

long long count_at_least(const graph& g, vertex_id x, vertex_id y, long long q)
{
    long long c = 0;
    for (auto z : g.neighbors(y))
        c += z != x && static_cast<long long>(g.degree(z)) >= q;
    return c;
}

} // namespace

TEST(Sigma, SpecExamples)
{
    auto k3 = complete(3);
    EXPECT_EQ(sigma_q(k3, 0, 1, exact_real(2)), 1u);
    auto s = star(4);
    EXPECT_EQ(sigma_q(s, 1, 0, exact_real(3)), 0u);
    EXPECT_THROW(sigma_q(s, 1, 2, exact_real(1)), precondition_error);
}

TEST(Sigma, ComparatorChoice)
{
    auto s = star(3);
    // Leaves of degree 1 against q = 1: counted with >=, not with >.
    EXPECT_EQ(sigma_q(s, 1, 0, exact_real(1), threshold::at_least), 2u);
    EXPECT_EQ(sigma_q(s, 1, 0, exact_real(1), threshold::greater_than), 0u);
    EXPECT_EQ(sigma_q(s, 1, 0, exact_real::sqrt2() - 1), 2u);
}

TEST(PParams, SpecExamples)
{
    auto k3 = complete(3);
    for (vertex_id x = 0; x < 3; ++x) {
        auto p = p_params(k3, x);
        EXPECT_EQ(p.p_min, 0);
        EXPECT_EQ(p.p, 0);
    }
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(9, 0.5, rng);
        for (vertex_id x = 0; x < g.vertex_count(); ++x) {
            if (g.degree(x) == 0)
                continue;
            const auto half = static_cast<long long>(g.degree(x)) / 2;
            EXPECT_LE(p_params(g, x).p, half - 1);
            EXPECT_LE(p_params_q(g, x, exact_real::fraction(7, 2)).p, half - 3);
        }
    }
}

TEST(Val, SpecExamples)
{
    EXPECT_TRUE(check_val(complete(3)).holds);
    EXPECT_TRUE(check_val(cycle(5)).holds);
    auto v = check_val(star(3));
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->vertices, (std::vector<vertex_id>{0, 1}));
    EXPECT_EQ(v.witness->observed, exact_real(0));
    EXPECT_EQ(v.witness->required, exact_real(1));
}

TEST(W22W23, SpecExamples)
{
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
        EXPECT_TRUE(check_w22(cycle(n)).holds) << n;
        EXPECT_TRUE(check_w23(cycle(n)).holds) << n;
    }
    auto w = woodall_example(6, 3);
    EXPECT_TRUE(check_val(w).holds);
    EXPECT_TRUE(check_w22(w).holds);
    EXPECT_TRUE(check_w23(w).holds);
}

TEST(Lemmas, WitnessesRecount)
{
    std::mt19937_64 rng(12);
    std::size_t failures = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_graph(8, 0.45, rng);
        const auto delta = static_cast<long long>(g.max_degree());
        if (auto v = check_val(g); !v.holds) {
            ++failures;
            const auto x = v.witness->vertices[0], y = v.witness->vertices[1];
            ASSERT_TRUE(g.adjacent(x, y));
            const auto s = count_at_least(g, x, y, delta);
            const auto need = delta - static_cast<long long>(g.degree(x)) + 1;
            EXPECT_LT(s, need);
            EXPECT_EQ(v.witness->observed, exact_real(s));
            EXPECT_EQ(v.witness->required, exact_real(need));
        }
        if (auto v = check_w23(g); !v.holds) {
            const auto x = v.witness->vertices[0];
            const auto dx = static_cast<long long>(g.degree(x));
            long long best = std::numeric_limits<long long>::max();
            for (auto y : g.neighbors(x))
                best = std::min(best, count_at_least(g, x, y, 2 * delta - dx - static_cast<long long>(g.degree(y)) + 2));
            const long long p = std::min(best - delta + dx - 1, dx / 2 - 1);
            long long c = 0;
            for (auto y : g.neighbors(x))
                c += count_at_least(g, x, y, 2 * delta - dx - static_cast<long long>(g.degree(y)) + 2) >= delta - p - 1;
            EXPECT_LT(c, dx - p - 1);
            EXPECT_EQ(v.witness->observed, exact_real(c));
        }
    }
    EXPECT_GT(failures, 0u);
}

TEST(Lemmas, HoldOnCriticalGraphs)
{
    ASSERT_FALSE(critical_up_to_7().empty());
    for (const auto& g : critical_up_to_7()) {
        EXPECT_TRUE(check_val(g).holds) << write_graph6(g);
        EXPECT_TRUE(check_w22(g).holds) << write_graph6(g);
        EXPECT_TRUE(check_w23(g).holds) << write_graph6(g);
        EXPECT_TRUE(check_conjecture(g).holds) << write_graph6(g);
        const auto delta = static_cast<long long>(g.max_degree());
        for (long long twice = delta + 1; twice <= 2 * delta; ++twice) {
            const auto q = exact_real::fraction(twice, 2);
            EXPECT_TRUE(check_ppp(g, q).holds) << write_graph6(g);
            EXPECT_TRUE(check_pp(g, q).holds) << write_graph6(g);
        }
    }
}

TEST(QWindow, VacuousWhenEmpty)
{
    auto g = cycle(5);
    auto v = check_ppp(g, exact_real(2));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.checked, 0u);
    EXPECT_EQ(v.not_applicable, 10u);
    auto w = check_pp(g, exact_real(2));
    EXPECT_TRUE(w.holds);
    EXPECT_EQ(w.checked, 0u);
}

TEST(QWindow, PpFailureLocalizesInPpp)
{
    std::mt19937_64 rng(14);
    std::size_t pp_failures = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        auto g = random_graph(10 + trial % 6, 0.3 + 0.05 * (trial % 5), rng);
        const auto delta = static_cast<long long>(g.max_degree());
        if (delta < 4)
            continue;
        const auto q = exact_real::fraction(delta + 1 + static_cast<long long>(rng() % delta), 2);
        if (!check_pp(g, q).holds) {
            ++pp_failures;
            EXPECT_FALSE(check_ppp(g, q).holds) << write_graph6(g) << " q=" << q.str();
        }
    }
    EXPECT_GT(pp_failures, 0u);
}

TEST(Lemfact, BoundaryFloorIsZero)
{
    // y = 0 with neighbors x = 1, 2, 3, 4; x also adjacent to z = 5.
    graph g(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}});
    auto r = is_k_edge_colorable(g, 4, {}, edge_id{0});
    ASSERT_EQ(r.outcome, decision::yes);
    // d(x) + d(y) = 2 + 4 = Delta + 2, q = 3.
    auto lf = check_lemfact(*r.coloring, 1, 0, exact_real(3));
    ASSERT_TRUE(lf.applies);
    EXPECT_TRUE(lf.z.empty());
    ASSERT_FALSE(lf.count.holds);
    EXPECT_EQ(lf.count.witness->required, exact_real(1)); // Delta - d(y) + 1
}

TEST(Lemfact, EmptyZWithPositiveSurplusBoundFails)
{
    auto s = star(3);
    auto r = is_k_edge_colorable(s, 3, {}, edge_id{0});
    ASSERT_EQ(r.outcome, decision::yes);
    auto lf = check_lemfact(*r.coloring, 1, 0, exact_real(2));
    ASSERT_TRUE(lf.applies);
    EXPECT_FALSE(lf.surplus.holds);
    EXPECT_EQ(lf.surplus.witness->required, exact_real(2));
    EXPECT_FALSE(lf.count.holds);
    EXPECT_EQ(lf.count.witness->required, exact_real(2)); // floor(-1/1) = -1
}

TEST(Lemfact, NotApplicableOutsideRange)
{
    auto s = star(3);
    auto r = is_k_edge_colorable(s, 3, {}, edge_id{0});
    auto lf = check_lemfact(*r.coloring, 1, 0, exact_real(3));
    EXPECT_FALSE(lf.applies);
    EXPECT_TRUE(lf.holds());
}

TEST(Lemfact, RejectsWrongColoring)
{
    auto s = star(3);
    auto phi = vizing_color(s);
    EXPECT_THROW(check_lemfact(phi, 1, 0, exact_real(2)), precondition_error);
}

TEST(Lemfact, HoldsOnCriticalGraphs)
{
    std::size_t applied = 0;
    for (const auto& g : critical_up_to_7()) {
        const auto k = static_cast<color>(g.max_degree());
        const auto delta = static_cast<long long>(k);
        for (auto e : g.edges()) {
            enumerate_colorings(
                g, k, e,
                [&](const edge_coloring& phi) {
                    auto [u, v] = g.ends(e);
                    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}})
                        for (long long q = static_cast<long long>(g.degree(x)) + 1; q <= delta - 1; ++q) {
                            auto lf = check_lemfact(phi, x, y, exact_real(q));
                            applied += lf.applies;
                            EXPECT_TRUE(lf.holds()) << write_graph6(g) << " q=" << q;
                        }
                    return true;
                },
                200);
        }
    }
    EXPECT_GT(applied, 0u);
}

TEST(Conjecture, Bound)
{
    EXPECT_TRUE(check_conjecture(complete(3)).holds);
    EXPECT_TRUE(check_conjecture(cycle(7)).holds);
    auto v = check_conjecture(star(3));
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.witness->observed, exact_real::fraction(3, 2));
    EXPECT_EQ(v.witness->required, exact_real::fraction(11, 4));
}
