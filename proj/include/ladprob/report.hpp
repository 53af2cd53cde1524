#ifndef LADPROB_REPORT_HPP
#define LADPROB_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ladprob/asymptotics.hpp"
#include "ladprob/exact.hpp"
#include "ladprob/lad.hpp"
#include "ladprob/model_m1.hpp"
#include "ladprob/model_m2.hpp"

namespace ladprob {
namespace report {

/// The five analysis questions every quantity is filed under.
inline const char* kQuestions[] = {"reduction", "structure", "bound", "reliability",
                                   "covering"};

struct Entry {
    std::string question;     // one of kQuestions
    std::string description;  // plain-language event
    std::string conditioning; // the size profile the probability conditions on
    std::optional<ExactProb> value;
    std::string note; // free text when no probability applies
};

struct CurvePoint {
    std::string x;
    ExactProb y;
};

struct Curve {
    std::string name;
    std::string question;
    std::vector<CurvePoint> points;
};

struct AnalysisReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> profile; // ordered metadata
    std::vector<Entry> entries;
    std::vector<Curve> curves;
    std::vector<std::string> warnings;
};

inline std::string render_text(const AnalysisReport& r, int digits = 4) {
    std::ostringstream os;
    os << "== " << r.title << " ==\n";
    for (auto& [k, v] : r.profile) os << k << ": " << v << "\n";
    for (auto& e : r.entries) {
        os << "[" << e.question << "] " << e.description;
        if (!e.conditioning.empty()) os << " | given " << e.conditioning;
        os << "\n  ";
        if (e.value) os << to_decimal(*e.value, digits);
        else os << e.note;
        os << "\n";
    }
    for (auto& c : r.curves) {
        os << "[" << c.question << "] curve " << c.name << "\n";
        for (auto& p : c.points)
            os << "  " << p.x << "  " << to_decimal(p.y, digits) << "\n";
    }
    for (auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

inline nlohmann::json prob_to_json(const ExactProb& p, int digits) {
    return {{"decimal", to_decimal(p, digits)},
            {"numerator", p.num().str()},
            {"denominator", p.den().str()}};
}

inline std::string render_json(const AnalysisReport& r, int digits = 4) {
    nlohmann::json j;
    j["title"] = r.title;
    j["profile"] = nlohmann::json::object();
    for (auto& [k, v] : r.profile) j["profile"][k] = v;
    j["entries"] = nlohmann::json::array();
    for (auto& e : r.entries) {
        nlohmann::json je{{"question", e.question},
                          {"description", e.description},
                          {"conditioning", e.conditioning}};
        if (e.value) je["probability"] = prob_to_json(*e.value, digits);
        else je["note"] = e.note;
        j["entries"].push_back(je);
    }
    j["curves"] = nlohmann::json::array();
    for (auto& c : r.curves) {
        nlohmann::json jc{{"name", c.name}, {"question", c.question}};
        jc["points"] = nlohmann::json::array();
        for (auto& p : c.points)
            jc["points"].push_back({{"x", p.x}, {"y", prob_to_json(p.y, digits)}});
        j["curves"].push_back(jc);
    }
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

namespace detail {
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
} // namespace detail

inline std::string render_csv(const AnalysisReport& r, int digits = 4) {
    std::ostringstream os;
    os << "kind,question,name,conditioning,x,value\n";
    using detail::csv_escape;
    for (auto& [k, v] : r.profile)
        os << "profile,," << csv_escape(k) << ",,," << csv_escape(v) << "\n";
    for (auto& e : r.entries)
        os << "entry," << e.question << "," << csv_escape(e.description) << ","
           << csv_escape(e.conditioning) << ",,"
           << (e.value ? to_decimal(*e.value, digits) : csv_escape(e.note)) << "\n";
    for (auto& c : r.curves)
        for (auto& p : c.points)
            os << "curve," << c.question << "," << csv_escape(c.name) << ",,"
               << csv_escape(p.x) << "," << to_decimal(p.y, digits) << "\n";
    for (auto& w : r.warnings) os << "warning,,,,," << csv_escape(w) << "\n";
    return os.str();
}

inline std::string profile_string(const SizeProfile& p) {
    std::ostringstream os;
    auto put = [&](const char* name, const std::optional<std::uint64_t>& v) {
        if (v) os << (os.tellp() > 0 ? ", " : "") << name << "=" << *v;
    };
    put("n", p.n);
    put("n1", p.n1);
    put("n2", p.n2);
    put("k", p.k);
    put("k1", p.k1);
    put("k2", p.k2);
    os << (os.tellp() > 0 ? ", " : "") << "|Y|=" << p.spec.y_attrs
       << ", |Z|=" << p.spec.z_attrs;
    return os.str();
}

/// Full a-priori analysis of a loaded instance against a candidate Y:
/// projection sizes, solution status, and the probability battery under
/// both uniform models.
inline AnalysisReport analyze_instance(const lad::GroupedInstance& inst,
                                       const lad::AttributeSubset& y,
                                       AlphaCache& cache = default_alpha_cache()) {
    AnalysisReport r;
    r.title = "instance analysis";
    SizeProfile p = lad::size_profile(inst, y);
    const std::uint64_t n1 = *p.n1, n2 = *p.n2, k1 = *p.k1, k2 = *p.k2, k = *p.k;
    const std::uint64_t inter = k1 + k2 - k;
    std::string y_names;
    for (unsigned a : y) y_names += (y_names.empty() ? "" : ",") + inst.attributes[a];
    r.profile = {{"observations", std::to_string(*p.n)},
                 {"positive", std::to_string(n1)},
                 {"negative", std::to_string(n2)},
                 {"attributes", std::to_string(inst.attributes.size())},
                 {"Y", y_names},
                 {"projection k", std::to_string(k)},
                 {"projection k1", std::to_string(k1)},
                 {"projection k2", std::to_string(k2)},
                 {"projection intersection", std::to_string(inter)}};
    if (inst.dropped_duplicates)
        r.warnings.push_back(std::to_string(inst.dropped_duplicates) +
                             " duplicate observation(s) dropped at load");

    auto sat = lad::check_satisfiable(inst);
    if (!sat.satisfiable)
        throw unsatisfiable_instance("rows " + std::to_string(sat.witness->first) +
                                     " and " + std::to_string(sat.witness->second) +
                                     " coincide with different groups");
    auto sol = lad::is_solution(inst, y);
    {
        Entry e;
        e.question = "reduction";
        e.description = sol.is_solution ? "Y is a solution (groups stay disjoint under Y)"
                                        : "Y is NOT a solution";
        if (!sol.is_solution)
            e.note = "rows " + std::to_string(sol.witness->first) + " and " +
                     std::to_string(sol.witness->second) + " agree on Y across groups";
        else
            e.note = lad::is_non_dominated(inst, y) ? "non-dominated" : "dominated";
        r.entries.push_back(e);
    }

    const std::string cond = profile_string(p);
    {
        Entry e{"reduction", "groups have disjoint Y-projections a priori (single-size model)",
                "n=" + std::to_string(n1 + n2) + ", |Y|=" + std::to_string(p.spec.y_attrs) +
                    ", |Z|=" + std::to_string(p.spec.z_attrs),
                std::nullopt, ""};
        SizeProfile q = p;
        q.n = n1 + n2;
        e.value = m1::m1_probability(M1Case::B, q, cache);
        r.entries.push_back(e);
    }
    {
        Entry e{"structure", "observed projection sizes (k1, k2) under the disjoint model",
                cond, m1::m1_probability(M1Case::F, p, cache), ""};
        r.entries.push_back(e);
    }
    {
        Entry e{"structure", "positive group collapses to one Y-point (pattern event)", cond,
                m1::pattern_probability(n1, n2, p.spec, 1, cache), ""};
        r.entries.push_back(e);
    }
    {
        Entry e{"reliability", "all 2^|Y| vectors occur across the two groups", cond,
                m1::robustness_probability(p, /*grouped=*/true, cache), ""};
        r.entries.push_back(e);
    }
    {
        m2::IntersectionQuery q;
        q.n1 = n1;
        q.n2 = n2;
        q.spec = p.spec;
        q.t = inter;
        Entry e{"bound",
                "projection intersection stays <= the observed size (unconstrained model)",
                cond, m2::prob_intersection(q, cache), ""};
        r.entries.push_back(e);
    }
    {
        // Covering: chance the positive side needs exactly one pattern,
        // i.e. k1 = 1 given the group sizes.
        Entry e{"covering", "a single term covers the whole positive group", cond,
                m1::pattern_probability(n1, n2, p.spec, 1, cache), ""};
        auto cover = y.size() <= 12 ? std::optional(lad::min_pattern_cover(inst, y))
                                    : std::nullopt;
        if (cover) {
            e.note = "observed minimum cover size: " + std::to_string(cover->patterns.size());
            if (!cover->uncoverable.empty())
                r.warnings.push_back(std::to_string(cover->uncoverable.size()) +
                                     " positive observation(s) not coverable over Y");
        }
        r.entries.push_back(e);
    }
    return r;
}

} // namespace report
} // namespace ladprob

#endif
