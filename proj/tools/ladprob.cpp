// Command-line front end for the ladprob library: exact a-priori structural
// probabilities for two-group Boolean instances, desk-scale instance
// analysis, brute-force/Monte-Carlo oracles, and the EGF asymptotic regime.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ladprob/ladprob.hpp"

namespace {

using nlohmann::json;
using namespace ladprob;

struct Output {
    std::string format = "text"; // text | json | csv
    unsigned digits = 4;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string fields_to_string(const Fields& f) {
    std::string s;
    for (auto& [k, v] : f) s += (s.empty() ? "" : ", ") + k + "=" + v;
    return s;
}

void emit_probability(const Output& out, const std::string& question, const Fields& given,
                      const ExactProb& p) {
    if (out.format == "json") {
        json j{{"question", question},
               {"given", json::object()},
               {"probability", report::prob_to_json(p, out.digits)}};
        for (auto& [k, v] : given) j["given"][k] = v;
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "question,given,probability\n"
                  << question << ",\"" << fields_to_string(given) << "\","
                  << to_decimal(p, out.digits) << "\n";
    } else {
        std::cout << "question: " << question << "\n"
                  << "given: " << fields_to_string(given) << "\n"
                  << "probability: " << to_decimal(p, out.digits) << "\n";
    }
}

void emit_count(const Output& out, const std::string& name, const Fields& given,
                const ExactInt& v) {
    if (out.format == "json") {
        json j{{"quantity", name}, {"given", json::object()}, {"value", v.str()}};
        for (auto& [k, v2] : given) j["given"][k] = v2;
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "quantity,given,value\n"
                  << name << ",\"" << fields_to_string(given) << "\"," << v.str() << "\n";
    } else {
        std::cout << name << " | given " << fields_to_string(given) << "\n"
                  << v.str() << "\n";
    }
}

Fields spec_fields(const DomainSpec& s) {
    return {{"|Y|", std::to_string(s.y_attrs)}, {"|Z|", std::to_string(s.z_attrs)}};
}

lad::GroupedInstance load_from(const std::string& path,
                               const std::optional<std::string>& positive) {
    if (path == "-") return lad::load_instance(std::cin, positive);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return lad::load_instance(in, positive);
}

lad::AttributeSubset resolve_attrs(const lad::GroupedInstance& inst,
                                   const std::vector<std::string>& names) {
    lad::AttributeSubset y;
    for (const auto& name : names) {
        auto it = std::find(inst.attributes.begin(), inst.attributes.end(), name);
        if (it == inst.attributes.end())
            throw parse_error("unknown attribute '" + name + "'");
        y.push_back(static_cast<unsigned>(it - inst.attributes.begin()));
    }
    std::sort(y.begin(), y.end());
    if (std::adjacent_find(y.begin(), y.end()) != y.end())
        throw parse_error("duplicate attribute in Y");
    return y;
}

template <typename K>
json tally_to_json(const std::map<K, ExactInt>& m) {
    json j = json::object();
    for (auto& [k, v] : m) {
        if constexpr (std::is_same_v<K, std::uint64_t>) {
            j[std::to_string(k)] = v.str();
        } else {
            j[std::to_string(k.first) + "," + std::to_string(k.second)] = v.str();
        }
    }
    return j;
}

void emit_tally(const Output& out, const std::string& model, const oracle::OracleTally& t) {
    if (out.format == "json") {
        json j{{"model", model},
               {"total", t.total.str()},
               {"by_k", tally_to_json(t.by_k)},
               {"by_group_sizes", tally_to_json(t.by_group_sizes)},
               {"by_k1_k2", tally_to_json(t.by_k1_k2)},
               {"by_intersection", tally_to_json(t.by_intersection)}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "model: " << model << "\ntotal: " << t.total.str() << "\n";
    for (auto& [k, v] : t.by_k)
        std::cout << "k=" << k << ": " << v.str() << " ("
                  << to_decimal(ExactProb::ratio(v, t.total), out.digits) << ")\n";
    for (auto& [k, v] : t.by_k1_k2)
        std::cout << "k1=" << k.first << ",k2=" << k.second << ": " << v.str() << " ("
                  << to_decimal(ExactProb::ratio(v, t.total), out.digits) << ")\n";
    for (auto& [k, v] : t.by_group_sizes)
        std::cout << "n1=" << k.first << ",n2=" << k.second << ": " << v.str() << " ("
                  << to_decimal(ExactProb::ratio(v, t.total), out.digits) << ")\n";
    for (auto& [k, v] : t.by_intersection)
        std::cout << "u=" << k << ": " << v.str() << " ("
                  << to_decimal(ExactProb::ratio(v, t.total), out.digits) << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact a-priori probabilities of structural events for two-group "
                 "Boolean instances"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--digits", out.digits, "significant digits")
        ->check(CLI::Range(1u, 18u))
        ->capture_default_str();

    unsigned y_attrs = 0, z_attrs = 0;
    auto add_spec = [&](CLI::App* c, bool need_y = true) {
        if (need_y) c->add_option("--y-attrs", y_attrs, "|Y|")->required();
        c->add_option("--z-attrs", z_attrs, "|Z|")->required();
    };
    std::uint64_t n = 0, n1 = 0, n2 = 0, k = 0, k1 = 0, k2 = 0;

    // ---- coeff: raw counting quantities ----
    auto* coeff = app.add_subcommand("coeff", "counting coefficients");
    coeff->require_subcommand(1);
    auto* c_alpha = coeff->add_subcommand("alpha", "alpha(k; n)");
    c_alpha->add_option("--k", k)->required();
    c_alpha->add_option("--n", n)->required();
    add_spec(c_alpha, false);
    auto* c_rho = coeff->add_subcommand("rho", "rho(n), single-size disjoint model");
    c_rho->add_option("--n", n)->required();
    add_spec(c_rho);
    auto* c_rhog = coeff->add_subcommand("rho-groups", "rho(n1, n2), disjoint model");
    c_rhog->add_option("--n1", n1)->required();
    c_rhog->add_option("--n2", n2)->required();
    add_spec(c_rhog);
    auto* c_beta = coeff->add_subcommand("beta", "beta(k; n)");
    c_beta->add_option("--k", k)->required();
    c_beta->add_option("--n", n)->required();
    add_spec(c_beta);
    auto* c_lambda = coeff->add_subcommand("lambda", "lambda(k1, k2; n)");
    c_lambda->add_option("--k1", k1)->required();
    c_lambda->add_option("--k2", k2)->required();
    c_lambda->add_option("--n", n)->required();
    add_spec(c_lambda);
    auto* c_gamma = coeff->add_subcommand("gamma", "gamma(k; n1, n2)");
    c_gamma->add_option("--k", k)->required();
    c_gamma->add_option("--n1", n1)->required();
    c_gamma->add_option("--n2", n2)->required();
    add_spec(c_gamma);
    auto* c_delta = coeff->add_subcommand("delta", "delta(k1, k2; n1, n2)");
    c_delta->add_option("--k1", k1)->required();
    c_delta->add_option("--k2", k2)->required();
    c_delta->add_option("--n1", n1)->required();
    c_delta->add_option("--n2", n2)->required();
    add_spec(c_delta);

    // ---- m1: conditional probabilities in the disjoint-projection model ----
    auto* m1c = app.add_subcommand("m1", "single-sample-space model probabilities");
    m1c->require_subcommand(1);
    std::string m1_case = "F";
    auto* m1_prob = m1c->add_subcommand("prob", "case probability (B..F)");
    m1_prob->add_option("--case", m1_case, "B|C|D|E|F")->required();
    m1_prob->add_option("--n", n);
    m1_prob->add_option("--n1", n1);
    m1_prob->add_option("--n2", n2);
    m1_prob->add_option("--k", k);
    m1_prob->add_option("--k1", k1);
    m1_prob->add_option("--k2", k2);
    add_spec(m1_prob);
    std::uint64_t pat_r = 1;
    auto* m1_pat = m1c->add_subcommand("pattern-prob", "Pr(k1 = r / n1, n2)");
    m1_pat->add_option("--n1", n1)->required();
    m1_pat->add_option("--n2", n2)->required();
    m1_pat->add_option("--r", pat_r)->capture_default_str();
    add_spec(m1_pat);
    bool grouped = false;
    bool rob_unweighted = false;
    auto* m1_rob = m1c->add_subcommand("robust", "Pr(k = 2^|Y|)");
    m1_rob->add_option("--n", n);
    m1_rob->add_option("--n1", n1);
    m1_rob->add_option("--n2", n2);
    m1_rob->add_flag("--grouped", grouped, "condition on (n1, n2) instead of n");
    m1_rob->add_flag("--unweighted", rob_unweighted,
                     "occupancy variant: uniform n-subset, no class weighting");
    add_spec(m1_rob);

    // ---- m2: intersection probabilities in the unconstrained model ----
    auto* m2c = app.add_subcommand("m2", "two-known-sizes model probabilities");
    m2c->require_subcommand(1);
    auto* m2_inter = m2c->add_subcommand("inter", "projection intersection size");
    m2_inter->add_option("--n1", n1)->required();
    m2_inter->add_option("--n2", n2)->required();
    std::int64_t eq_u = -1, le_t = -1;
    auto* opt_eq = m2_inter->add_option("--eq", eq_u, "Pr(intersection = u)");
    auto* opt_le = m2_inter->add_option("--at-most", le_t, "Pr(intersection <= t)");
    opt_eq->excludes(opt_le);
    add_spec(m2_inter);

    // ---- scan over |Y| ----
    auto* scan = app.add_subcommand("scan", "sweep |Y| and report rho(n1,n2)/rho(n)");
    unsigned total_attrs = 0, y_lo = 1, y_hi = 0;
    scan->add_option("--n1", n1)->required();
    scan->add_option("--n2", n2)->required();
    scan->add_option("--attrs", total_attrs, "total attribute count")->required();
    scan->add_option("--from", y_lo, "smallest |Y|")->capture_default_str();
    scan->add_option("--to", y_hi, "largest |Y| (default: total)");

    // ---- instance analysis ----
    auto* inst_cmd = app.add_subcommand("instance", "load and analyze a data file");
    std::string file = "-";
    std::vector<std::string> y_names;
    std::string positive;
    bool want_solutions = false, want_patterns = false, want_cover = false,
         want_project = false;
    inst_cmd->add_option("--file", file, "CSV/TSV path, - for stdin")->required();
    inst_cmd->add_option("--y", y_names, "attribute names forming Y")->delimiter(',');
    inst_cmd->add_option("--positive-label", positive,
                         "group label to treat as positive (multi-label files)");
    inst_cmd->add_flag("--minimal-solutions", want_solutions,
                       "search minimum-cardinality solutions");
    inst_cmd->add_flag("--patterns", want_patterns, "list prime patterns over Y");
    inst_cmd->add_flag("--cover", want_cover, "minimum pattern cover over Y");
    inst_cmd->add_flag("--emit-projection", want_project, "print the projection on Y");

    // ---- oracles ----
    auto* orc = app.add_subcommand("oracle", "independent enumeration/sampling checks");
    orc->require_subcommand(1);
    std::string model = "m1";
    auto* orc_ex = orc->add_subcommand("exhaustive", "exact brute-force tallies");
    orc_ex->add_option("--model", model, "m1|m2")->check(CLI::IsMember({"m1", "m2"}))
        ->required();
    orc_ex->add_option("--n", n);
    orc_ex->add_option("--n1", n1);
    orc_ex->add_option("--n2", n2);
    add_spec(orc_ex);
    std::uint64_t samples = 100000, seed = 1;
    auto* orc_mc = orc->add_subcommand("mc", "Monte Carlo frequencies");
    orc_mc->add_option("--model", model, "m1|m2")->check(CLI::IsMember({"m1", "m2"}))
        ->required();
    orc_mc->add_option("--n", n);
    orc_mc->add_option("--n1", n1);
    orc_mc->add_option("--n2", n2);
    orc_mc->add_option("--samples", samples)->capture_default_str();
    orc_mc->add_option("--seed", seed)->capture_default_str();
    add_spec(orc_mc);

    // ---- asymptotics ----
    auto* asym = app.add_subcommand("asympt", "EGF regime (d fixed, |Z| -> infinity)");
    asym->require_subcommand(1);
    std::uint64_t d = 2;
    auto* as_egf = asym->add_subcommand("egf", "exact vs leading-order count");
    as_egf->add_option("--d", d, "number of admissible Y-values")->required();
    as_egf->add_option("--n", n)->required();
    auto* as_closed = asym->add_subcommand("closed", "closed form, d in {2,3,4}");
    as_closed->add_option("--d", d)->required();
    as_closed->add_option("--n1", n1)->required();
    as_closed->add_option("--n2", n2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        DomainSpec spec{y_attrs, z_attrs};
        auto& cache = default_alpha_cache();

        if (*c_alpha)
            emit_count(out, "alpha",
                       {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                        {"|Z|", std::to_string(z_attrs)}},
                       alpha(k, n, spec, cache));
        else if (*c_rho) {
            Fields f{{"n", std::to_string(n)}};
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_count(out, "rho", f, m1::rho_total(n, spec, cache));
        } else if (*c_rhog) {
            Fields f{{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}};
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_count(out, "rho-groups", f, m1::rho_groups(n1, n2, spec, cache));
        } else if (*c_beta)
            emit_count(out, "beta",
                       {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                        {"|Y|", std::to_string(y_attrs)}, {"|Z|", std::to_string(z_attrs)}},
                       m1::beta(k, n, spec, cache));
        else if (*c_lambda)
            emit_count(out, "lambda",
                       {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)},
                        {"n", std::to_string(n)}, {"|Y|", std::to_string(y_attrs)},
                        {"|Z|", std::to_string(z_attrs)}},
                       m1::lambda_coeff(k1, k2, n, spec, cache));
        else if (*c_gamma)
            emit_count(out, "gamma",
                       {{"k", std::to_string(k)}, {"n1", std::to_string(n1)},
                        {"n2", std::to_string(n2)}, {"|Y|", std::to_string(y_attrs)},
                        {"|Z|", std::to_string(z_attrs)}},
                       m1::gamma_coeff(k, n1, n2, spec, cache));
        else if (*c_delta)
            emit_count(out, "delta",
                       {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)},
                        {"n1", std::to_string(n1)}, {"n2", std::to_string(n2)},
                        {"|Y|", std::to_string(y_attrs)}, {"|Z|", std::to_string(z_attrs)}},
                       m1::delta_coeff(k1, k2, n1, n2, spec, cache));
        else if (*m1_prob) {
            SizeProfile p;
            p.spec = spec;
            if (m1_prob->count("--n")) p.n = n;
            if (m1_prob->count("--n1")) p.n1 = n1;
            if (m1_prob->count("--n2")) p.n2 = n2;
            if (m1_prob->count("--k")) p.k = k;
            if (m1_prob->count("--k1")) p.k1 = k1;
            if (m1_prob->count("--k2")) p.k2 = k2;
            M1Case c = m1_case_from_string(m1_case);
            Fields f;
            auto put = [&](const char* name, const std::optional<std::uint64_t>& v) {
                if (v) f.emplace_back(name, std::to_string(*v));
            };
            put("n", p.n); put("n1", p.n1); put("n2", p.n2);
            put("k", p.k); put("k1", p.k1); put("k2", p.k2);
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_probability(out, c == M1Case::B ? "reduction" : "structure", f,
                             m1::m1_probability(c, p, cache));
        } else if (*m1_pat) {
            Fields f{{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)},
                     {"r", std::to_string(pat_r)}};
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_probability(out, "covering", f,
                             m1::pattern_probability(n1, n2, spec, pat_r, cache));
        } else if (*m1_rob) {
            SizeProfile p;
            p.spec = spec;
            if (m1_rob->count("--n")) p.n = n;
            if (m1_rob->count("--n1")) p.n1 = n1;
            if (m1_rob->count("--n2")) p.n2 = n2;
            if (!grouped && !p.n && p.n1 && p.n2) grouped = true;
            if (rob_unweighted && grouped)
                throw parse_error("--unweighted applies to the ungrouped form only");
            Fields f;
            if (grouped) {
                f = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}};
            } else {
                f = {{"n", std::to_string(n)}};
            }
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_probability(out, "reliability", f,
                             rob_unweighted
                                 ? m1::coverage_probability(n, spec, cache)
                                 : m1::robustness_probability(p, grouped, cache));
        } else if (*m2_inter) {
            if ((eq_u < 0) == (le_t < 0))
                throw parse_error("pass exactly one of --eq or --at-most");
            m2::IntersectionQuery q;
            q.n1 = n1;
            q.n2 = n2;
            q.spec = spec;
            Fields f{{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}};
            if (eq_u >= 0) {
                q.u = static_cast<std::uint64_t>(eq_u);
                f.emplace_back("u", std::to_string(eq_u));
            } else {
                q.t = static_cast<std::uint64_t>(le_t);
                f.emplace_back("t", std::to_string(le_t));
            }
            auto sf = spec_fields(spec);
            f.insert(f.end(), sf.begin(), sf.end());
            emit_probability(out, "bound", f, m2::prob_intersection(q, cache));
        } else if (*scan) {
            if (!y_hi) y_hi = total_attrs;
            auto res = m1::scan_attribute_count(n1, n2, total_attrs, y_lo, y_hi, cache);
            if (out.format == "json") {
                json j{{"question", "reduction"},
                       {"given", {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)},
                                  {"attrs", std::to_string(total_attrs)}}},
                       {"argmax", res.argmax},
                       {"unimodal", res.unimodal},
                       {"points", json::array()}};
                for (auto& pt : res.points)
                    j["points"].push_back({{"y_attrs", pt.y_attrs},
                                           {"ratio", report::prob_to_json(pt.ratio, out.digits)}});
                std::cout << j.dump(2) << "\n";
            } else if (out.format == "csv") {
                std::cout << "y_attrs,ratio\n";
                for (auto& pt : res.points)
                    std::cout << pt.y_attrs << "," << to_decimal(pt.ratio, out.digits) << "\n";
            } else {
                std::cout << "question: reduction\n"
                          << "given: n1=" << n1 << ", n2=" << n2
                          << ", attrs=" << total_attrs << "\n";
                for (auto& pt : res.points)
                    std::cout << "|Y|=" << pt.y_attrs << ": "
                              << to_decimal(pt.ratio, out.digits) << "\n";
                std::cout << "argmax |Y|=" << res.argmax
                          << (res.unimodal ? " (unimodal)" : " (not unimodal)") << "\n";
            }
        } else if (*inst_cmd) {
            auto inst = load_from(file, inst_cmd->count("--positive-label")
                                            ? std::optional(positive)
                                            : std::nullopt);
            if (y_names.empty()) {
                // no Y: profile plus satisfiability (and solutions if asked)
                auto sat = lad::check_satisfiable(inst);
                std::cout << "observations: " << inst.n() << " (positive "
                          << inst.group_size(1) << ", negative " << inst.group_size(2)
                          << "), attributes: " << inst.attributes.size() << "\n"
                          << "satisfiable: " << (sat.satisfiable ? "yes" : "no") << "\n";
                if (inst.dropped_duplicates)
                    std::cout << "dropped duplicates: " << inst.dropped_duplicates << "\n";
                if (want_solutions) {
                    auto ms = lad::find_minimal_solutions(inst);
                    std::cout << "minimal solutions (" << (ms.optimal ? "exact" : "budget-cut")
                              << "): " << ms.solutions.size() << "\n";
                    for (auto& s : ms.solutions) {
                        std::string names;
                        for (unsigned a : s)
                            names += (names.empty() ? "" : ",") + inst.attributes[a];
                        std::cout << "  {" << names << "}\n";
                    }
                }
                return 0;
            }
            auto y = resolve_attrs(inst, y_names);
            if (want_project) {
                lad::emit_projected(inst, y, std::cout);
                return 0;
            }
            if (want_patterns || want_cover) {
                if (want_patterns) {
                    for (auto& p : lad::enumerate_patterns(inst, y, true))
                        std::cout << lad::term_to_string(p, inst.attributes) << "  covers "
                                  << p.cover.size() << "\n";
                }
                if (want_cover) {
                    auto cov = lad::min_pattern_cover(inst, y);
                    std::cout << "cover size: " << cov.patterns.size()
                              << (cov.exact ? " (exact)" : " (greedy)") << "\n";
                    for (auto& p : cov.patterns)
                        std::cout << "  " << lad::term_to_string(p, inst.attributes)
                                  << "  covers " << p.cover.size() << "\n";
                    if (!cov.uncoverable.empty()) {
                        std::cout << "uncoverable positive rows:";
                        for (auto r : cov.uncoverable) std::cout << " " << r;
                        std::cout << "\n";
                    }
                }
                return 0;
            }
            auto rep = report::analyze_instance(inst, y, cache);
            if (out.format == "json") std::cout << report::render_json(rep, out.digits);
            else if (out.format == "csv") std::cout << report::render_csv(rep, out.digits);
            else std::cout << report::render_text(rep, out.digits);
        } else if (*orc_ex) {
            if (model == "m1") {
                if (!orc_ex->count("--n")) throw missing_field("n");
                emit_tally(out, "m1", oracle::enumerate_m1(n, spec));
            } else {
                if (!orc_ex->count("--n1") || !orc_ex->count("--n2"))
                    throw missing_field("n1/n2");
                emit_tally(out, "m2", oracle::enumerate_m2(n1, n2, spec));
            }
        } else if (*orc_mc) {
            oracle::MonteCarloResult r;
            if (model == "m1") {
                if (!orc_mc->count("--n")) throw missing_field("n");
                r = oracle::monte_carlo_m1(n, spec, samples, seed);
            } else {
                if (!orc_mc->count("--n1") || !orc_mc->count("--n2"))
                    throw missing_field("n1/n2");
                r = oracle::monte_carlo_m2(n1, n2, spec, samples, seed);
            }
            if (out.format == "json") {
                json j{{"algorithm", r.algorithm}, {"seed", r.seed},
                       {"samples", r.samples}, {"attempts", r.attempts},
                       {"by_k", json::object()}, {"by_intersection", json::object()}};
                for (auto& [kk, c] : r.by_k)
                    j["by_k"][std::to_string(kk)] = {{"count", c},
                                                     {"frequency", r.frequency(c)},
                                                     {"std_error", r.std_error(c)}};
                for (auto& [u, c] : r.by_intersection)
                    j["by_intersection"][std::to_string(u)] = {{"count", c},
                                                               {"frequency", r.frequency(c)},
                                                               {"std_error", r.std_error(c)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "algorithm: " << r.algorithm << "\nseed: " << r.seed
                          << "\nsamples: " << r.samples << " (attempts " << r.attempts
                          << ")\n";
                for (auto& [kk, c] : r.by_k)
                    std::cout << "k=" << kk << ": " << r.frequency(c) << " +- "
                              << r.std_error(c) << "\n";
                for (auto& [u, c] : r.by_intersection)
                    std::cout << "u=" << u << ": " << r.frequency(c) << " +- "
                              << r.std_error(c) << "\n";
            }
        } else if (*as_egf) {
            auto res = egf::egf_rho(d, n);
            if (out.format == "json") {
                json j{{"exact", res.exact.str()},
                       {"leading", res.leading.str()},
                       {"relative_gap", to_decimal(res.relative_gap, out.digits)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "exact: " << res.exact.str() << "\nleading: "
                          << res.leading.str() << "\nrelative gap: "
                          << to_decimal(res.relative_gap, out.digits) << "\n";
            }
        } else if (*as_closed) {
            emit_count(out, "egf-rho-groups",
                       {{"d", std::to_string(d)}, {"n1", std::to_string(n1)},
                        {"n2", std::to_string(n2)}},
                       egf::egf_rho_groups_closed(d, n1, n2));
        }
        return 0;
    } catch (const ladprob::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "E_PARSE" || e.code() == "E_UNSAT" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: E_DOMAIN: " << e.what() << "\n";
        return 1;
    }
}
