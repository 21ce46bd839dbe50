// critlab: batch front-end over graph6 streams.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "critlab/critlab.hpp"
#include "critlab/json_io.hpp"

using namespace critlab;

namespace {

enum exit_code { ok = 0, found = 1, input_error = 2, exhausted = 3 };

struct outcome {
    std::optional<json> record; // nothing: emit no line (filter misses)
    std::string raw;            // plain-text line instead of a record
    bool found = false;
    bool bad_input = false;
    bool exhausted = false;
};

struct common_opts {
    std::string input = "-";
    unsigned jobs = 1;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    std::string format = "jsonl";
    bool timing = false;
    std::uint64_t seed = 0;

    solve_budget budget() const { return {budget_nodes, budget_secs}; }
};

std::string csv_cell(const json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

class emitter {
public:
    explicit emitter(std::string format) : format_(std::move(format)) {}

    void emit(const outcome& o)
    {
        if (!o.raw.empty()) {
            std::cout << o.raw << '\n';
            return;
        }
        if (!o.record)
            return;
        if (format_ == "jsonl") {
            std::cout << o.record->dump() << '\n';
            return;
        }
        if (!header_done_) {
            bool first = true;
            for (auto it = o.record->begin(); it != o.record->end(); ++it) {
                std::cout << (first ? "" : ",") << it.key();
                first = false;
            }
            std::cout << '\n';
            header_done_ = true;
        }
        bool first = true;
        for (auto it = o.record->begin(); it != o.record->end(); ++it) {
            std::cout << (first ? "" : ",") << csv_cell(it.value());
            first = false;
        }
        std::cout << '\n';
    }

private:
    std::string format_;
    bool header_done_ = false;
};

using job_fn = std::function<outcome(const graph6_record&)>;

/// Runs `fn` over every input line with `jobs` workers, printing in input order.
int run_stream(const common_opts& opt, const job_fn& fn)
{
    std::ifstream file;
    if (opt.input != "-") {
        file.open(opt.input);
        if (!file) {
            std::cerr << "critlab: cannot open " << opt.input << '\n';
            return input_error;
        }
    }
    std::istream& in = opt.input == "-" ? std::cin : file;
    const auto records = read_graph6_lines(in);
    emitter out(opt.format);
    bool any_found = false, any_bad = false, any_exhausted = false;
    const std::size_t chunk = std::max<std::size_t>(64, 64 * std::size_t{opt.jobs});
    std::vector<outcome> results;
    for (std::size_t base = 0; base < records.size(); base += chunk) {
        const std::size_t end = std::min(records.size(), base + chunk);
        results.assign(end - base, {});
        std::atomic<std::size_t> next{base};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < end;) {
                const auto& r = records[i];
                outcome o;
                if (!r.g) {
                    o.record = json{{"index", r.index}, {"graph6", r.text}, {"error", r.error}};
                    o.bad_input = true;
                } else {
                    try {
                        const auto t0 = std::chrono::steady_clock::now();
                        o = fn(r);
                        if (opt.timing && o.record) {
                            std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
                            (*o.record)["elapsed_ms"] = dt.count();
                        }
                    } catch (const std::exception& e) {
                        o = {};
                        o.record = json{{"index", r.index}, {"graph6", r.text}, {"error", e.what()}};
                        o.bad_input = true;
                    }
                }
                results[i - base] = std::move(o);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < opt.jobs; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        for (const auto& o : results) {
            out.emit(o);
            any_found |= o.found;
            any_bad |= o.bad_input;
            any_exhausted |= o.exhausted;
        }
    }
    if (any_bad)
        return input_error;
    if (any_exhausted)
        return exhausted;
    return any_found ? found : ok;
}

json head(const graph6_record& r)
{
    const graph& g = *r.g;
    return json{{"index", r.index}, {"graph6", r.text}, {"n", g.vertex_count()}, {"m", g.edge_count()},
                {"delta", g.max_degree()}};
}

/// "auto" or an exact value such as 7, 16/3, 46.75.
std::optional<exact_real> parse_q(const std::string& s, const graph& g)
{
    if (s == "auto") {
        const auto d = static_cast<long long>(g.max_degree());
        if (d >= 56)
            return q_of(d).q;
        return std::nullopt;
    }
    return exact_real::parse(s);
}

std::pair<long long, long long> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long long v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

void add_common(CLI::App* sub, common_opts& o, bool stream = true)
{
    if (stream) {
        sub->add_option("input", o.input, "graph6 file, '-' for stdin")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--budget-nodes", o.budget_nodes, "search-node limit per solve")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget-secs", o.budget_secs, "wall-clock limit per solve")->check(CLI::PositiveNumber);
        sub->add_flag("--timing", o.timing, "add elapsed_ms to records");
    }
    sub->add_option("--format", o.format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"critlab: chromatic index, criticality, adjacency lemmas and discharging"};
    app.require_subcommand(1);
    common_opts opt;
    if (const char* s = std::getenv("CRITLAB_SEED"))
        opt.seed = std::strtoull(s, nullptr, 10);

    auto* chi = app.add_subcommand("chi", "chromatic index of each graph");
    add_common(chi, opt);

    auto* critical = app.add_subcommand("critical", "edge-Delta-criticality of each graph");
    add_common(critical, opt);

    auto* filter = app.add_subcommand("filter", "pass through graphs that are critical (default) or class two");
    add_common(filter, opt);
    bool want_class_two = false;
    filter->add_flag("--class-two", want_class_two, "keep class-two graphs instead");
    filter->add_flag("--critical", "keep edge-Delta-critical graphs (default)");

    auto* lemmas = app.add_subcommand("lemmas", "evaluate adjacency lemmas");
    add_common(lemmas, opt);
    std::string which = "val,w22,w23";
    std::string q_text = "auto";
    lemmas->add_option("--which", which, "comma list of val,w22,w23,ppp,pp,conjecture")->capture_default_str();
    lemmas->add_option("--q", q_text, "threshold for ppp/pp: auto or p/q")->capture_default_str();

    auto* prune_cmd = app.add_subcommand("prune", "search for a non-criticality certificate");
    add_common(prune_cmd, opt);
    std::size_t per_edge = 32;
    bool use_claim4 = false;
    prune_cmd->add_option("--colorings", per_edge, "sampled colorings per edge")->capture_default_str();
    prune_cmd->add_flag("--claim4", use_claim4, "also probe the Y-set bound (needs --q)");
    prune_cmd->add_option("--q", q_text, "threshold for --claim4: auto or p/q")->capture_default_str();

    auto* fans = app.add_subcommand("fans", "fan, path, broom and tree structures per edge");
    add_common(fans, opt);

    auto* disch = app.add_subcommand("discharge", "charge ledger, partition and claims");
    add_common(disch, opt);
    long long c_param = 18;
    disch->add_option("--q", q_text, "auto or p/q")->capture_default_str();
    disch->add_option("--c", c_param, "degree slack for Z1/Z2")->check(CLI::PositiveNumber)->capture_default_str();

    auto* bound = app.add_subcommand("bound", "average-degree lower bounds");
    add_common(bound, opt, false);
    std::string delta_range = "56..70";
    bool chain = false, table = false;
    std::optional<long long> table_n;
    bound->add_option("--delta", delta_range, "A or A..B")->capture_default_str();
    bound->add_flag("--chain", chain, "include the derivation intermediates");
    bound->add_flag("--table", table, "include the historical bounds");
    bound->add_option("--n", table_n, "vertex count for the conjecture row");
    bound->add_option("--c", c_param, "c for --chain")->check(CLI::PositiveNumber)->capture_default_str();

    auto* gen = app.add_subcommand("gen", "all graphs on n vertices up to isomorphism, as graph6");
    std::size_t gen_n = 5;
    bool gen_connected = false;
    gen->add_option("--n", gen_n, "vertex count (at most 10)")->required();
    gen->add_flag("--connected", gen_connected, "connected graphs only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            for (const auto& g : gen_connected ? all_connected_graphs(gen_n) : all_graphs(gen_n))
                std::cout << write_graph6(g) << '\n';
            return ok;
        }

        if (bound->parsed()) {
            auto [lo, hi] = parse_range(delta_range);
            if (lo > hi)
                throw precondition_error("bound: empty --delta range");
            emitter out(opt.format);
            for (long long d = lo; d <= hi; ++d) {
                if (table) {
                    outcome o;
                    o.record = json{{"delta", d}};
                    for (const auto& row : bound_table(d, table_n))
                        (*o.record)[row.name] = row.approx.str(10, std::ios_base::fixed);
                    out.emit(o);
                    continue;
                }
                const auto t1 = bound_theorem1(d);
                outcome o;
                o.record = json{{"delta", d},
                                {"theorem1", t1.value.to_decimal(5)},
                                {"regime", t1.regime},
                                {"beats_two_thirds", t1.beats_two_thirds}};
                if (chain) {
                    const json full = to_json(bound_chain(d, c_param));
                    for (const auto& [k, v] : full.items())
                        if (k != "delta")
                            (*o.record)[k] = v.is_object() ? v["decimal"] : v;
                }
                out.emit(o);
            }
            return ok;
        }

        const auto budget = opt.budget();
        if (chi->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                auto res = chromatic_index(*r.g, budget);
                json j = head(r);
                j["chi_prime"] = res.value ? json(*res.value) : json(nullptr);
                j["nodes"] = res.nodes;
                o.exhausted = !res.value;
                o.record = std::move(j);
                return o;
            });

        if (critical->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                json j = head(r);
                if (r.g->edge_count() == 0) {
                    j["chi_prime"] = 0;
                    j["critical"] = false;
                    o.record = std::move(j);
                    return o;
                }
                auto v = is_edge_delta_critical(*r.g, budget);
                j["chi_prime"] = v.chi_prime ? json(*v.chi_prime) : json(nullptr);
                j["critical"] = v.exhausted ? json(nullptr) : json(v.is_critical);
                j["edges_checked"] = v.edges_checked;
                j["nodes"] = v.nodes;
                if (v.non_critical_edge) {
                    auto [a, b] = r.g->ends(*v.non_critical_edge);
                    j["non_critical_edge"] = {a, b};
                }
                o.exhausted = v.exhausted;
                o.record = std::move(j);
                return o;
            });

        if (filter->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                if (r.g->edge_count() == 0)
                    return o;
                if (want_class_two) {
                    auto res = chromatic_index(*r.g, budget);
                    o.exhausted = !res.value;
                    if (res.value && *res.value > r.g->max_degree())
                        o.raw = r.text;
                    return o;
                }
                auto v = is_edge_delta_critical(*r.g, budget);
                o.exhausted = v.exhausted;
                if (v.is_critical)
                    o.raw = r.text;
                return o;
            });

        if (lemmas->parsed()) {
            std::vector<std::string> names;
            std::stringstream ss(which);
            for (std::string item; std::getline(ss, item, ',');)
                if (!item.empty())
                    names.push_back(item);
            for (const auto& nm : names)
                if (nm != "val" && nm != "w22" && nm != "w23" && nm != "ppp" && nm != "pp" && nm != "conjecture")
                    throw precondition_error("lemmas: unknown lemma '" + nm + "'");
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                json j = head(r);
                json verdicts = json::array();
                const graph& g = *r.g;
                for (const auto& nm : names) {
                    lemma_verdict v;
                    if (nm == "val")
                        v = check_val(g);
                    else if (nm == "w22")
                        v = check_w22(g);
                    else if (nm == "w23")
                        v = check_w23(g);
                    else if (nm == "conjecture")
                        v = check_conjecture(g);
                    else {
                        auto q = q_text == "auto"
                                     ? std::optional<exact_real>(
                                           exact_real(static_cast<long long>(g.max_degree() / 2 + 1)))
                                     : parse_q(q_text, g);
                        v = nm == "ppp" ? check_ppp(g, *q) : check_pp(g, *q);
                    }
                    o.found |= !v.holds;
                    verdicts.push_back(to_json(v));
                }
                j["verdicts"] = std::move(verdicts);
                o.record = std::move(j);
                return o;
            });
        }

        if (prune_cmd->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                json j = head(r);
                prune_options po;
                po.budget = budget;
                po.colorings_per_edge = per_edge;
                po.seed = opt.seed;
                po.claim4 = use_claim4;
                if (use_claim4)
                    po.claim4_q = parse_q(q_text, *r.g);
                auto res = prune(*r.g, po);
                j["certificate"] = res.cert ? to_json(*res.cert) : json(nullptr);
                j["inconclusive"] = res.inconclusive;
                j["colorings_tried"] = res.colorings_tried;
                o.found = res.cert.has_value();
                o.exhausted = res.inconclusive;
                o.record = std::move(j);
                return o;
            });

        if (fans->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                const graph& g = *r.g;
                json j = head(r);
                json per_edge_out = json::array();
                const auto k = static_cast<color>(g.max_degree());
                for (auto e : g.edges()) {
                    auto res = is_k_edge_colorable(g, k, budget, e);
                    auto [y0, y1] = g.ends(e);
                    json je{{"edge", {y0, y1}}};
                    if (res.outcome != decision::yes) {
                        je["colorable"] = res.outcome == decision::no ? json(false) : json(nullptr);
                        o.exhausted |= res.outcome == decision::budget_exhausted;
                        per_edge_out.push_back(std::move(je));
                        continue;
                    }
                    const edge_coloring& phi = *res.coloring;
                    auto fan = build_vizing_fan(phi, y0, y1);
                    auto tree = build_tashkinov_tree(phi, y0, y1);
                    std::size_t paths = 0, p4_fail = 0, brooms = 0, broom_fail = 0;
                    for (auto [a, b] : {std::pair{y0, y1}, std::pair{y1, y0}}) {
                        for (const auto& kp : enumerate_kierstead_paths(phi, a, b, 3))
                            if (kp.edges.size() == 3) {
                                ++paths;
                                p4_fail += !check_p4(phi, kp).all_hold();
                            }
                        for (const auto& bm : enumerate_simple_brooms(phi, a, b)) {
                            ++brooms;
                            broom_fail += !check_broom(phi, bm).holds();
                        }
                    }
                    const bool fan_ok = is_elementary(phi, fan.vertices).elementary;
                    je["colorable"] = true;
                    je["vizing_fan"] = to_json(fan, phi);
                    je["vizing_fan_elementary"] = fan_ok;
                    je["tashkinov_tree"] = to_json(tree.tree, phi);
                    je["tashkinov_elementary"] = tree.elementary.elementary;
                    je["kierstead_paths4"] = paths;
                    je["p4_failures"] = p4_fail;
                    je["brooms"] = brooms;
                    je["broom_failures"] = broom_fail;
                    o.found |= !fan_ok || p4_fail > 0 || broom_fail > 0;
                    per_edge_out.push_back(std::move(je));
                }
                j["edges"] = std::move(per_edge_out);
                o.record = std::move(j);
                return o;
            });

        if (disch->parsed())
            return run_stream(opt, [&](const graph6_record& r) {
                outcome o;
                const graph& g = *r.g;
                json j = head(r);
                auto q = parse_q(q_text, g);
                if (!q)
                    throw precondition_error("discharge: --q auto needs Delta >= 56; pass an explicit p/q");
                j["ledger"] = to_json(discharge(g, *q));
                j["partition"] = to_json(partition(g, *q, c_param));
                json claims = json::array();
                for (const auto& v : verify_claims(g, *q, c_param)) {
                    o.found |= !v.holds;
                    claims.push_back(to_json(v));
                }
                j["claims"] = std::move(claims);
                o.record = std::move(j);
                return o;
            });
    } catch (const std::exception& e) {
        std::cerr << "critlab: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
