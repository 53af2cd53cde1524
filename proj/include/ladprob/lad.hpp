#ifndef LADPROB_LAD_HPP
#define LADPROB_LAD_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ladprob/errors.hpp"
#include "ladprob/model_m1.hpp"

namespace ladprob {
namespace lad {

/// Boolean observation matrix with a two-valued group labeling: the
/// (Omega, X, D, G) tuple. Immutable after load.
struct GroupedInstance {
    std::vector<std::string> attributes;
    std::vector<std::vector<std::uint8_t>> rows; // rows[o][a] in {0, 1}
    std::vector<int> groups;                     // 1 (positive) or 2 (negative)
    std::size_t dropped_duplicates = 0;

    std::size_t n() const { return rows.size(); }
    std::size_t group_size(int g) const {
        std::size_t c = 0;
        for (int gi : groups) c += gi == g;
        return c;
    }
};

/// Sorted distinct attribute indices: the candidate Y. Complement is Z.
using AttributeSubset = std::vector<unsigned>;

struct ProjectionSummary {
    std::uint64_t k = 0, k1 = 0, k2 = 0;
    std::uint64_t intersection_size = 0; // |pi_Y(G1) ^ pi_Y(G2)| = k1 + k2 - k
};

/// A term with its positive-group cover (Def. 2): positive/negative literal
/// attribute sets, disjoint, true on every covered positive row and on no
/// negative row.
struct Pattern {
    std::vector<unsigned> pos, neg;
    std::vector<std::size_t> cover; // row indices of covered positive observations

    std::size_t literal_count() const { return pos.size() + neg.size(); }
};

namespace detail {

inline std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) {
        std::size_t b = cell.find_first_not_of(" \r");
        std::size_t e = cell.find_last_not_of(" \r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

} // namespace detail

/// Parses the tabular format: header row of attribute names plus a reserved
/// "group" column, cells 0/1, group labels {1,2} or {P,N}. With
/// `positive_label`, multi-group files are read as that group vs the rest.
inline GroupedInstance load_instance(std::istream& in,
                                     std::optional<std::string> positive_label = {}) {
    std::string header;
    if (!std::getline(in, header)) throw parse_error("empty input");
    char sep = header.find('\t') != std::string::npos ? '\t' : ',';
    auto names = detail::split_line(header, sep);
    std::optional<std::size_t> group_col;
    GroupedInstance inst;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == "group") {
            if (group_col) throw parse_error("duplicate 'group' column");
            group_col = i;
        } else {
            inst.attributes.push_back(names[i]);
        }
    }
    if (!group_col) throw parse_error("missing reserved 'group' column");

    std::vector<std::string> labels; // raw labels in row order
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = detail::split_line(line, sep);
        if (cells.size() != names.size())
            throw parse_error("row " + std::to_string(lineno) + ": expected " +
                              std::to_string(names.size()) + " cells, got " +
                              std::to_string(cells.size()));
        std::vector<std::uint8_t> row;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == *group_col) {
                labels.push_back(cells[i]);
                continue;
            }
            if (cells[i] == "0") row.push_back(0);
            else if (cells[i] == "1") row.push_back(1);
            else
                throw parse_error("row " + std::to_string(lineno) + ", column '" +
                                  names[i] + "': non-Boolean cell '" + cells[i] + "'");
        }
        inst.rows.push_back(std::move(row));
    }

    std::set<std::string> distinct(labels.begin(), labels.end());
    auto to_group = [&](const std::string& l) -> int {
        if (positive_label) return l == *positive_label ? 1 : 2;
        if (l == "1" || l == "P") return 1;
        if (l == "2" || l == "N") return 2;
        throw parse_error("unrecognized group label '" + l +
                          "' (use 1/2 or P/N, or pass a positive label)");
    };
    if (positive_label) {
        if (!distinct.count(*positive_label))
            throw parse_error("positive label '" + *positive_label + "' not present");
    } else if (distinct.size() != 2) {
        throw parse_error("expected exactly two group labels, found " +
                          std::to_string(distinct.size()));
    }
    for (const auto& l : labels) inst.groups.push_back(to_group(l));

    // Identical lines (same values, same group) are deleted.
    std::set<std::pair<std::vector<std::uint8_t>, int>> seen;
    GroupedInstance dedup;
    dedup.attributes = inst.attributes;
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        if (seen.emplace(inst.rows[o], inst.groups[o]).second) {
            dedup.rows.push_back(inst.rows[o]);
            dedup.groups.push_back(inst.groups[o]);
        } else {
            ++dedup.dropped_duplicates;
        }
    }
    return dedup;
}

struct SatVerdict {
    bool satisfiable = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // conflicting rows
};

/// Property 1: satisfiable iff no two identical full-width rows carry
/// different groups.
inline SatVerdict check_satisfiable(const GroupedInstance& inst) {
    std::map<std::vector<std::uint8_t>, std::size_t> first;
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        auto [it, fresh] = first.emplace(inst.rows[o], o);
        if (!fresh && inst.groups[it->second] != inst.groups[o])
            return {false, std::make_pair(it->second, o)};
    }
    return {};
}

namespace detail {

inline void validate_subset(const GroupedInstance& inst, const AttributeSubset& y) {
    if (y.empty()) throw std::domain_error("attribute subset must be non-empty");
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] >= inst.attributes.size())
            throw std::domain_error("attribute index out of range");
        if (i > 0 && y[i] <= y[i - 1])
            throw std::domain_error("attribute indices must be strictly increasing");
    }
}

inline std::vector<std::uint8_t> restrict_row(const std::vector<std::uint8_t>& row,
                                              const AttributeSubset& y) {
    std::vector<std::uint8_t> r;
    r.reserve(y.size());
    for (unsigned a : y) r.push_back(row[a]);
    return r;
}

} // namespace detail

inline ProjectionSummary project(const GroupedInstance& inst, const AttributeSubset& y) {
    detail::validate_subset(inst, y);
    std::set<std::vector<std::uint8_t>> all, g1, g2;
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        auto r = detail::restrict_row(inst.rows[o], y);
        (inst.groups[o] == 1 ? g1 : g2).insert(r);
        all.insert(std::move(r));
    }
    ProjectionSummary s;
    s.k = all.size();
    s.k1 = g1.size();
    s.k2 = g2.size();
    s.intersection_size = s.k1 + s.k2 - s.k;
    return s;
}

struct SolutionVerdict {
    bool is_solution = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // cross-group agreeing rows
};

/// Def. 5: Y is a solution iff no two observations in different groups agree
/// on every attribute of Y.
inline SolutionVerdict is_solution(const GroupedInstance& inst, const AttributeSubset& y) {
    detail::validate_subset(inst, y);
    std::map<std::vector<std::uint8_t>, std::size_t> seen_g1, seen_g2;
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        auto r = detail::restrict_row(inst.rows[o], y);
        auto& mine = inst.groups[o] == 1 ? seen_g1 : seen_g2;
        auto& other = inst.groups[o] == 1 ? seen_g2 : seen_g1;
        if (auto it = other.find(r); it != other.end())
            return {false, std::make_pair(it->second, o)};
        mine.emplace(std::move(r), o);
    }
    return {};
}

/// Def. 6: a solution is non-dominated iff every single-attribute removal
/// breaks the solution property.
inline bool is_non_dominated(const GroupedInstance& inst, const AttributeSubset& y) {
    if (!is_solution(inst, y).is_solution)
        throw std::domain_error("is_non_dominated requires a solution");
    if (y.size() == 1) return true;
    for (std::size_t drop = 0; drop < y.size(); ++drop) {
        AttributeSubset reduced;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (i != drop) reduced.push_back(y[i]);
        if (is_solution(inst, reduced).is_solution) return false;
    }
    return true;
}

struct SearchBudget {
    unsigned max_cardinality = 0;            // 0 means |X|
    std::uint64_t max_subsets = 20'000'000;  // subsets tested before giving up
};

struct MinimalSolutions {
    std::vector<AttributeSubset> solutions; // all solutions at the first feasible level
    bool optimal = false;                   // false when the budget cut a level short
};

/// Ascending-cardinality exhaustive search. A subset is a solution iff it
/// hits the difference mask of every cross-group row pair.
inline MinimalSolutions find_minimal_solutions(const GroupedInstance& inst,
                                               SearchBudget budget = {}) {
    auto sat = check_satisfiable(inst);
    if (!sat.satisfiable)
        throw unsatisfiable_instance("rows " + std::to_string(sat.witness->first) + " and " +
                                     std::to_string(sat.witness->second) +
                                     " are identical with different groups");
    const std::size_t width = inst.attributes.size();
    if (width > 64) throw cap_exceeded("solution search supports at most 64 attributes");

    std::vector<std::uint64_t> pair_masks;
    for (std::size_t o1 = 0; o1 < inst.rows.size(); ++o1)
        for (std::size_t o2 = o1 + 1; o2 < inst.rows.size(); ++o2) {
            if (inst.groups[o1] == inst.groups[o2]) continue;
            std::uint64_t m = 0;
            for (std::size_t a = 0; a < width; ++a)
                if (inst.rows[o1][a] != inst.rows[o2][a]) m |= std::uint64_t(1) << a;
            pair_masks.push_back(m);
        }
    std::sort(pair_masks.begin(), pair_masks.end());
    pair_masks.erase(std::unique(pair_masks.begin(), pair_masks.end()), pair_masks.end());

    MinimalSolutions result;
    unsigned max_card = budget.max_cardinality ? budget.max_cardinality
                                               : static_cast<unsigned>(width);
    std::uint64_t tested = 0;
    for (unsigned card = 1; card <= max_card; ++card) {
        std::vector<unsigned> idx(card);
        for (unsigned i = 0; i < card; ++i) idx[i] = i;
        bool done = false;
        while (!done) {
            if (++tested > budget.max_subsets) return result; // optimal stays false
            std::uint64_t mask = 0;
            for (unsigned i : idx) mask |= std::uint64_t(1) << i;
            bool ok = true;
            for (std::uint64_t pm : pair_masks)
                if (!(pm & mask)) { ok = false; break; }
            if (ok) result.solutions.emplace_back(idx);
            // next lexicographic combination
            int j = static_cast<int>(card) - 1;
            while (j >= 0 && idx[j] == width - card + j) --j;
            if (j < 0) done = true;
            else {
                ++idx[j];
                for (unsigned i = j + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        if (!result.solutions.empty()) {
            result.optimal = true;
            return result;
        }
    }
    result.optimal = true; // all levels exhausted, no solution below max_card
    return result;
}

namespace detail {

inline bool term_satisfied(const std::vector<std::uint8_t>& row,
                           const std::vector<unsigned>& pos,
                           const std::vector<unsigned>& neg) {
    for (unsigned a : pos)
        if (!row[a]) return false;
    for (unsigned a : neg)
        if (row[a]) return false;
    return true;
}

inline std::optional<Pattern> make_pattern(const GroupedInstance& inst,
                                           std::vector<unsigned> pos,
                                           std::vector<unsigned> neg) {
    Pattern p;
    p.pos = std::move(pos);
    p.neg = std::move(neg);
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        bool sat = term_satisfied(inst.rows[o], p.pos, p.neg);
        if (!sat) continue;
        if (inst.groups[o] == 2) return std::nullopt; // a negative row satisfies it
        p.cover.push_back(o);
    }
    if (p.cover.empty()) return std::nullopt;
    return p;
}

inline bool is_prime(const GroupedInstance& inst, const Pattern& p) {
    auto drop_one = [&](const std::vector<unsigned>& v, std::size_t skip) {
        std::vector<unsigned> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != skip) out.push_back(v[i]);
        return out;
    };
    for (std::size_t i = 0; i < p.pos.size(); ++i)
        if (make_pattern(inst, drop_one(p.pos, i), p.neg)) return false;
    for (std::size_t i = 0; i < p.neg.size(); ++i)
        if (make_pattern(inst, p.pos, drop_one(p.neg, i))) return false;
    return true;
}

} // namespace detail

/// All patterns with Var(t) contained in Y, each with its positive cover.
/// With prime_only, restricted to patterns from which no literal can be
/// removed. 3^|Y| terms, so |Y| is capped at 20.
inline std::vector<Pattern> enumerate_patterns(const GroupedInstance& inst,
                                               const AttributeSubset& y,
                                               bool prime_only = false) {
    detail::validate_subset(inst, y);
    if (y.size() > 20)
        throw cap_exceeded("pattern enumeration over " + std::to_string(y.size()) +
                           " attributes exceeds the 3^20 term budget");
    std::vector<Pattern> out;
    std::vector<unsigned> state(y.size(), 0); // 0 absent, 1 positive, 2 negative
    while (true) {
        std::vector<unsigned> pos, neg;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (state[i] == 1) pos.push_back(y[i]);
            else if (state[i] == 2) neg.push_back(y[i]);
        }
        if (!pos.empty() || !neg.empty()) {
            if (auto p = detail::make_pattern(inst, std::move(pos), std::move(neg)))
                if (!prime_only || detail::is_prime(inst, *p)) out.push_back(std::move(*p));
        }
        std::size_t i = 0;
        while (i < state.size() && state[i] == 2) state[i++] = 0;
        if (i == state.size()) break;
        ++state[i];
    }
    return out;
}

struct CoverResult {
    std::vector<Pattern> patterns;
    bool cover_complete = false;
    bool exact = true;                       // false when the greedy fallback ran
    std::vector<std::size_t> uncoverable;    // positive rows no pattern over Y reaches
};

namespace detail {

inline void exact_cover_search(const std::vector<Pattern>& cands,
                               const std::vector<std::vector<std::size_t>>& covered_by,
                               std::set<std::size_t>& uncovered,
                               std::vector<std::size_t>& chosen,
                               std::vector<std::size_t>& best) {
    if (uncovered.empty()) {
        if (best.empty() || chosen.size() < best.size()) best = chosen;
        return;
    }
    if (!best.empty() && chosen.size() + 1 >= best.size() && uncovered.size() > 0 &&
        chosen.size() + 1 > best.size() - 1)
        return; // cannot improve
    // branch on the uncovered row with fewest candidate patterns
    std::size_t pick = *uncovered.begin();
    for (std::size_t r : uncovered)
        if (covered_by[r].size() < covered_by[pick].size()) pick = r;
    for (std::size_t c : covered_by[pick]) {
        std::vector<std::size_t> removed;
        for (std::size_t r : cands[c].cover)
            if (uncovered.erase(r)) removed.push_back(r);
        chosen.push_back(c);
        exact_cover_search(cands, covered_by, uncovered, chosen, best);
        chosen.pop_back();
        for (std::size_t r : removed) uncovered.insert(r);
    }
}

} // namespace detail

/// Minimum set of patterns over Y whose covers union to the coverable part
/// of P. Exact branch-and-bound set cover up to `exact_threshold` candidate
/// prime patterns, greedy beyond (largest cover, fewest literals,
/// lexicographic).
inline CoverResult min_pattern_cover(const GroupedInstance& inst, const AttributeSubset& y,
                                     std::size_t exact_threshold = 4096) {
    CoverResult res;
    auto cands = enumerate_patterns(inst, y, /*prime_only=*/true);

    std::set<std::size_t> positives;
    for (std::size_t o = 0; o < inst.rows.size(); ++o)
        if (inst.groups[o] == 1) positives.insert(o);

    std::map<std::size_t, std::vector<std::size_t>> covered_by_map;
    for (std::size_t c = 0; c < cands.size(); ++c)
        for (std::size_t r : cands[c].cover) covered_by_map[r].push_back(c);
    for (std::size_t r : positives)
        if (!covered_by_map.count(r)) res.uncoverable.push_back(r);

    std::set<std::size_t> target = positives;
    for (std::size_t r : res.uncoverable) target.erase(r);
    if (target.empty()) {
        res.cover_complete = res.uncoverable.empty();
        return res;
    }

    std::vector<std::size_t> chosen_idx;
    if (cands.size() <= exact_threshold) {
        std::vector<std::vector<std::size_t>> covered_by(inst.rows.size());
        for (auto& [r, cs] : covered_by_map) covered_by[r] = cs;
        std::vector<std::size_t> chosen, best;
        detail::exact_cover_search(cands, covered_by, target, chosen, best);
        chosen_idx = best;
    } else {
        res.exact = false;
        std::set<std::size_t> uncovered = target;
        while (!uncovered.empty()) {
            std::size_t best_c = cands.size();
            std::size_t best_gain = 0;
            for (std::size_t c = 0; c < cands.size(); ++c) {
                std::size_t gain = 0;
                for (std::size_t r : cands[c].cover) gain += uncovered.count(r);
                if (gain == 0) continue;
                bool better = gain > best_gain;
                if (gain == best_gain && best_c < cands.size()) {
                    if (cands[c].cover.size() != cands[best_c].cover.size())
                        better = cands[c].cover.size() > cands[best_c].cover.size();
                    else if (cands[c].literal_count() != cands[best_c].literal_count())
                        better = cands[c].literal_count() < cands[best_c].literal_count();
                }
                if (better) { best_c = c; best_gain = gain; }
            }
            for (std::size_t r : cands[best_c].cover) uncovered.erase(r);
            chosen_idx.push_back(best_c);
        }
    }
    for (std::size_t c : chosen_idx) res.patterns.push_back(cands[c]);
    res.cover_complete = res.uncoverable.empty();
    return res;
}

/// Bridges an instance plus candidate Y to the probability-model queries.
inline SizeProfile size_profile(const GroupedInstance& inst, const AttributeSubset& y) {
    auto proj = project(inst, y);
    SizeProfile p;
    p.n = inst.n();
    p.n1 = inst.group_size(1);
    p.n2 = inst.group_size(2);
    p.k = proj.k;
    p.k1 = proj.k1;
    p.k2 = proj.k2;
    p.spec = DomainSpec{static_cast<unsigned>(y.size()),
                        static_cast<unsigned>(inst.attributes.size() - y.size())};
    return p;
}

/// Writes the projection of the instance on Y back in the input format.
inline void emit_projected(const GroupedInstance& inst, const AttributeSubset& y,
                           std::ostream& out) {
    detail::validate_subset(inst, y);
    for (unsigned a : y) out << inst.attributes[a] << ",";
    out << "group\n";
    std::set<std::pair<std::vector<std::uint8_t>, int>> emitted;
    for (std::size_t o = 0; o < inst.rows.size(); ++o) {
        auto r = detail::restrict_row(inst.rows[o], y);
        if (!emitted.emplace(r, inst.groups[o]).second) continue;
        for (std::uint8_t v : r) out << int(v) << ",";
        out << inst.groups[o] << "\n";
    }
}

inline std::string term_to_string(const Pattern& p, const std::vector<std::string>& attrs) {
    std::string s;
    std::size_t i = 0, j = 0;
    auto append = [&](bool negated, unsigned a) {
        if (!s.empty()) s += " & ";
        if (negated) s += "!";
        s += attrs[a];
    };
    while (i < p.pos.size() || j < p.neg.size()) {
        if (j == p.neg.size() || (i < p.pos.size() && p.pos[i] < p.neg[j]))
            append(false, p.pos[i++]);
        else
            append(true, p.neg[j++]);
    }
    return s;
}

} // namespace lad
} // namespace ladprob

#endif
