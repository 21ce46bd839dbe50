#pragma once

// Average-degree lower bounds for edge-Delta-critical graphs.

#include <optional>
#include <string>
#include <vector>

#include "discharging.hpp"
#include "exact_real.hpp"
#include "graph.hpp"

namespace critlab {

struct theorem1_value {
    exact_real value;
    std::string regime;           // "delta>=66", "delta=65", "56<=delta<=64"
    bool beats_two_thirds = false; // value >= (2/3)(Delta + 2)
};

/// The three published lines, as exact rationals.
inline theorem1_value bound_theorem1(long long delta)
{
    if (delta < 56)
        throw precondition_error("bound_theorem1: Delta must be at least 56");
    const rational d(delta);
    theorem1_value out;
    if (delta >= 66) {
        out.value = exact_real(rational(69241, 100000) * d - rational(15658, 100000));
        out.regime = "delta>=66";
    } else if (delta == 65) {
        out.value = exact_real(rational(69392, 100000) * d - rational(20642, 100000));
        out.regime = "delta=65";
    } else {
        out.value = exact_real(rational(68706, 100000) * d + rational(19815, 100000));
        out.regime = "56<=delta<=64";
    }
    out.beats_two_thirds = out.value >= exact_real(rational(2 * (delta + 2), 3));
    return out;
}

enum class chain_route { first, second };

/// Every intermediate of the counting argument at one (Delta, c).
struct chain_report {
    long long delta = 0;
    long long c = 0;
    q_value q;
    exact_real q_star;
    exact_real a;
    exact_real slack;       // Delta - q - c
    chain_route route = chain_route::first;
    exact_real f;           // f(c), first route
    exact_real f_prime;     // f'(c), second route
    exact_real f1;
    exact_real f2;
    exact_real bound;       // the lower bound the chosen route yields
    exact_real relaxed;     // f1-linearized form of the first route; equals bound on the second
    std::optional<std::string> error; // set instead of dividing by zero
};

inline chain_report bound_chain(long long delta, long long c = 18)
{
    if (delta < 56)
        throw precondition_error("bound_chain: Delta must be at least 56");
    if (c <= 0)
        throw precondition_error("bound_chain: c must be positive");
    chain_report r;
    r.delta = delta;
    r.c = c;
    r.q = q_of(delta);
    const exact_real D(delta), C(c), r2 = exact_real::sqrt2();
    const exact_real& q = r.q.q;
    if (r.q.branch == q_branch::first) {
        r.q_star = 2 * r2 * D / (2 * r2 + 1);
        r.a = 1 + exact_real(1) / (2 * r2 + 1);
    } else {
        r.q_star = exact_real::fraction(3 * delta, 4);
        r.a = 2;
    }
    r.slack = D - q - C;
    const exact_real gap = D - q;
    const exact_real k5 = claim5_ratio(delta, q, c);
    r.f_prime = 2 * k5;
    if (gap.sign() == 0) {
        r.error = "Delta - q = 0";
        return r;
    }
    r.f = (3 - C / gap) * k5;
    const exact_real den1 = exact_real(18 * c + 6) * D - exact_real(18 * c + 9) * r.q_star;
    r.f1 = (2 * C * D - 3 * C * r.q_star) / den1;
    r.f2 = exact_real(9 * c + 6) + exact_real(18 * c + 9) * r.a -
           (exact_real(5 * c * c + 2 * c) * D - exact_real(6 * c * c + 3 * c) * q + exact_real(3 * c * c + 2 * c)) /
               gap;
    if (r.slack.sign() > 0) {
        r.route = chain_route::first;
        if ((3 + r.f).sign() == 0) {
            r.error = "3 + f(c) = 0";
            return r;
        }
        r.bound = q + (2 + 2 * D - 3 * q) / (3 + r.f);
        r.relaxed = q + r.f1 * D + (2 * C * D + 3 * C * r.a * D - r.f2 * r.f1 * D) / den1;
    } else {
        r.route = chain_route::second;
        r.bound = q - (3 * q - 2 * D - 2) / (3 + r.f_prime);
        r.relaxed = r.bound;
    }
    return r;
}

/// One row of the historical table; `exact` is empty when the value leaves Q[sqrt 2].
struct bound_row {
    std::string name;
    std::optional<exact_real> exact;
    decimal50 approx;
};

inline std::vector<bound_row> bound_table(long long delta, std::optional<long long> n = std::nullopt)
{
    if (delta < 2)
        throw precondition_error("bound_table: Delta must be at least 2");
    std::vector<bound_row> rows;
    auto add = [&](std::string name, const exact_real& v) { rows.push_back({std::move(name), v, v.approx()}); };
    auto add_approx = [&](std::string name, const decimal50& v) { rows.push_back({std::move(name), std::nullopt, v}); };
    const exact_real D(delta);

    add("fiorini", delta % 2 ? exact_real::fraction(delta + 1, 2) : exact_real::fraction(delta + 2, 2));

    if (delta == 9 || delta == 11 || delta == 13)
        add("haile", exact_real::fraction(3 * (delta + 2), 5));
    if (delta >= 10 && delta % 2 == 0)
        add("haile", exact_real::fraction(delta + 6, 2) - exact_real::fraction(12, delta + 4));
    if (delta == 15)
        add_approx("haile", (15 + boost::multiprecision::sqrt(decimal50(29))) / 2);
    if (delta >= 17 && delta % 2 == 1)
        add("haile", exact_real::fraction(delta + 7, 2) - exact_real::fraction(16, delta + 5));

    {
        const long long s = 2 * delta - 1;
        long long r = 0;
        while ((r + 1) * (r + 1) <= s)
            ++r;
        if (r * r == s)
            add("sanders-zhao", exact_real::fraction(delta + r, 2));
        else
            add_approx("sanders-zhao", (decimal50(delta) + boost::multiprecision::sqrt(decimal50(s))) / 2);
    }

    {
        long long t = 0;
        while (2 * t * t < delta)
            ++t;
        add("woodall-t", exact_real::fraction(t * (delta + t - 1), 2 * t - 1));
    }

    add("woodall-2/3(D+1)", exact_real::fraction(2 * (delta + 1), 3));
    if (delta >= 8)
        add("woodall-2/3D+1", exact_real::fraction(2 * delta, 3) + 1);
    if (delta >= 15)
        add("woodall-2/3(D+2)", exact_real::fraction(2 * (delta + 2), 3));
    if (delta >= 56)
        add("theorem1", bound_theorem1(delta).value);
    if (n) {
        if (*n <= 0)
            throw precondition_error("bound_table: n must be positive");
        add("conjecture", D - 1 + exact_real::fraction(3, *n));
    }
    return rows;
}

} // namespace critlab
