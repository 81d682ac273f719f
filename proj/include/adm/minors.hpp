#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adm/census.hpp"
#include "adm/core.hpp"
#include "adm/errors.hpp"
#include "adm/invariants.hpp"
#include "adm/planegraph.hpp"
#include "adm/reduce.hpp"
#include "adm/triality.hpp"

namespace adm {

// ---- reduction traces -------------------------------------------------------

struct ReductionStep {
    std::string edge;
    ReductionKind kind;
};

using ReductionTrace = std::vector<ReductionStep>;

inline AlternatingDimap replay_trace(const AlternatingDimap& d, const ReductionTrace& trace) {
    AlternatingDimap cur = d;
    for (auto& step : trace) cur = reduce(cur, step.edge, step.kind);
    return cur;
}

// ---- minor closure ----------------------------------------------------------

struct MinorEntry {
    AlternatingDimap dimap;
    ReductionTrace trace;
};

// Breadth-first closure over single-edge reductions, keeping every minor with
// at least target_size edges (the input itself included), deduplicated by
// canonical form. Each entry carries one witness trace from the input.
inline std::map<std::string, MinorEntry> minors_up_to(const AlternatingDimap& d,
                                                      int target_size, int max_edges = 8) {
    if (d.edge_count() > max_edges)
        throw PreconditionError("SizeBoundExceeded: " + std::to_string(d.edge_count()) +
                                " edges exceeds the minor-closure bound");
    std::map<std::string, MinorEntry> out;
    std::deque<std::string> frontier;
    auto visit = [&](const AlternatingDimap& m, ReductionTrace trace) {
        std::string key = canonical_form(m).key;
        if (out.count(key)) return;
        out.emplace(key, MinorEntry{m, std::move(trace)});
        frontier.push_back(key);
    };
    visit(d, {});
    while (!frontier.empty()) {
        MinorEntry cur = out.at(frontier.front());
        frontier.pop_front();
        if (cur.dimap.edge_count() <= target_size) continue;
        for (auto& id : cur.dimap.edge_ids()) {
            for (ReductionKind mu :
                 {ReductionKind::One, ReductionKind::Omega, ReductionKind::Omega2}) {
                ReductionTrace next = cur.trace;
                next.push_back({id, mu});
                visit(reduce(cur.dimap, id, mu), std::move(next));
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.dimap.edge_count() < target_size ? out.erase(it) : ++it;
    return out;
}

inline std::optional<ReductionTrace> has_minor(const AlternatingDimap& d,
                                               const AlternatingDimap& h, int max_edges = 8) {
    auto all = minors_up_to(d, h.edge_count(), max_edges);
    auto it = all.find(canonical_form(h).key);
    if (it == all.end()) return std::nullopt;
    return it->second.trace;
}

// ---- strategy-derived values ------------------------------------------------

namespace detail {

template <class Fn>
void cartesian_sums(const std::vector<std::vector<MultiPoly16>>& parts, size_t i,
                    const MultiPoly16& acc, Fn&& emit) {
    if (i == parts.size()) {
        emit(acc);
        return;
    }
    for (auto& v : parts[i]) cartesian_sums(parts, i + 1, acc + v, emit);
}

}  // namespace detail

// Every value the recursion can produce when each recursive branch is free to
// pick its own next edge, rather than all branches following one shared edge
// ordering. The two notions differ: under a shared ordering the three branches
// of a non-triloop step are reduced in lockstep, which correlates their
// values; with free strategies the branches are independent.
inline std::vector<MultiPoly16> strategy_derived_values(
    const AlternatingDimap& d, int max_edges = 6,
    std::map<std::string, std::vector<MultiPoly16>>* memo = nullptr) {
    if (d.edge_count() > max_edges)
        throw PreconditionError("SizeBoundExceeded: " + std::to_string(d.edge_count()) +
                                " edges exceeds the strategy enumeration bound");
    std::map<std::string, std::vector<MultiPoly16>> local;
    if (!memo) memo = &local;
    if (d.empty()) return {MultiPoly16(1)};
    std::string key = canonical_form(d).key;
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;

    auto wt = symbolic_weights();
    std::vector<MultiPoly16> result;
    auto add = [&](const MultiPoly16& v) {
        if (std::find(result.begin(), result.end(), v) == result.end()) result.push_back(v);
    };
    for (auto& e : d.edge_ids()) {
        EdgeClass c = classify_edge(d, e);
        std::vector<std::pair<int, ReductionKind>> branch;
        switch (c.kind) {
            case EdgeClass::Ultraloop: branch = {{PW, ReductionKind::Star}}; break;
            case EdgeClass::Proper1Loop: branch = {{PX, ReductionKind::One}}; break;
            case EdgeClass::ProperOmegaLoop: branch = {{PY, ReductionKind::Omega}}; break;
            case EdgeClass::ProperOmega2Loop: branch = {{PZ, ReductionKind::Omega2}}; break;
            case EdgeClass::Proper1Semiloop:
                branch = {{PA, ReductionKind::One},
                          {PB, ReductionKind::Omega},
                          {PC, ReductionKind::Omega2}};
                break;
            case EdgeClass::ProperOmegaSemiloop:
                branch = {{PD, ReductionKind::One},
                          {PE, ReductionKind::Omega},
                          {PF, ReductionKind::Omega2}};
                break;
            case EdgeClass::ProperOmega2Semiloop:
                branch = {{PG, ReductionKind::One},
                          {PH, ReductionKind::Omega},
                          {PI, ReductionKind::Omega2}};
                break;
            default:
                branch = {{PJ, ReductionKind::One},
                          {PK, ReductionKind::Omega},
                          {PL, ReductionKind::Omega2}};
                break;
        }
        std::vector<std::vector<MultiPoly16>> parts;
        for (auto& [widx, mu] : branch) {
            std::vector<MultiPoly16> scaled;
            for (auto& v : strategy_derived_values(reduce(d, e, mu), max_edges, memo))
                scaled.push_back(wt[widx] * v);
            parts.push_back(std::move(scaled));
        }
        detail::cartesian_sums(parts, 0, MultiPoly16(0), add);
    }
    (*memo)[key] = result;
    return result;
}

// ---- the excluded-minor library ---------------------------------------------

struct ExcludedLibrary {
    AlternatingDimap g13, g23a, g23c, g351, g24;
};

namespace detail {

// Unique three-edge class with one in-star and two faces of each kind,
// located in the census rather than trusted from a drawing.
inline AlternatingDimap find_g13() {
    std::optional<AlternatingDimap> found;
    for (auto& t : enumerate_dimaps(3, true).classes) {
        AlternatingDimap d = from_triple(t);
        DimapStats s = stats(d);
        if (s.is == 1 && s.af == 2 && s.cf == 2) {
            if (found) throw InternalCheckError("ambiguous three-edge library search");
            found = d;
        }
    }
    if (!found) throw InternalCheckError("three-edge library instance not found");
    return *found;
}

// Unique four-edge class with twelve distinct strategy-derived polynomials,
// among them the fully reduced product and the triple-split sum.
inline AlternatingDimap find_g24() {
    MultiPoly16 product = MultiPoly16::parse("w*x*y*z");
    MultiPoly16 sum = MultiPoly16::parse("j*w*y*z + k*w*x*y + l*w*x*z");
    std::optional<AlternatingDimap> found;
    for (auto& t : enumerate_dimaps(4, true).classes) {
        AlternatingDimap d = from_triple(t);
        if (stats(d).total_genus() != 0) continue;
        auto values = strategy_derived_values(d);
        if (values.size() != 12) continue;
        bool has_product = false, has_sum = false;
        for (auto& v : values) {
            has_product = has_product || v == product;
            has_sum = has_sum || v == sum;
        }
        if (!has_product || !has_sum) continue;
        if (found) throw InternalCheckError("ambiguous four-edge library search");
        found = d;
    }
    if (!found) throw InternalCheckError("four-edge library instance not found");
    return *found;
}

}  // namespace detail

inline const ExcludedLibrary& excluded_library() {
    static const ExcludedLibrary lib = [] {
        AlternatingDimap g13 = detail::find_g13();
        return ExcludedLibrary{g13, trial(g13), trial2(g13),
                               subdivide(alt_c(make_cycle(2)), "e1+"), detail::find_g24()};
    }();
    return lib;
}

// ---- reduction to a subdimap ------------------------------------------------

namespace detail {

// omega / omega2 reduction that deletes exactly the named edge: the merged
// edge produced by a successor surgery keeps the surviving partner's id, so
// repeated reductions stay inside the original edge set.
inline AlternatingDimap reduce_absorbing(const AlternatingDimap& d, const std::string& e,
                                         bool left) {
    ReduceResult r = reduce_detail(d, e, left ? ReductionKind::Omega : ReductionKind::Omega2);
    if (!r.created) return r.dimap;
    std::string partner;
    for (auto& id : r.removed)
        if (id != e) partner = id;
    EmbeddedDigraph g = r.dimap.graph();
    EdgeEnds ends = g.edges.at(*r.created);
    g.edges.erase(*r.created);
    g.edges[partner] = ends;
    for (auto& [v, rot] : g.rotation)
        for (auto& s : rot)
            if (s.edge == *r.created) s.edge = partner;
    return AlternatingDimap::validate(g);
}

inline std::string exact_state_key(const AlternatingDimap& d) {
    std::string s;
    for (auto& [id, e] : d.edges()) s += id + ":" + e.tail + ">" + e.head + ";";
    for (auto& [v, rot] : d.graph().rotation) {
        s += v + "[";
        // rotate the cyclic word to its least representative
        std::vector<std::string> slots;
        for (auto& h : rot) slots.push_back(h.str());
        size_t best = 0;
        for (size_t i = 1; i < slots.size(); i++) {
            for (size_t k = 0; k < slots.size(); k++) {
                const std::string &a = slots[(i + k) % slots.size()],
                                  &b = slots[(best + k) % slots.size()];
                if (a != b) {
                    if (a < b) best = i;
                    break;
                }
            }
        }
        for (size_t k = 0; k < slots.size(); k++) s += slots[(best + k) % slots.size()] + ",";
        s += "]";
    }
    return s;
}

inline bool exact_equal(const AlternatingDimap& a, const AlternatingDimap& b) {
    return a.vertices() == b.vertices() && a.edge_count() == b.edge_count() &&
           is_subdimap(a, b);
}

}  // namespace detail

// Edge sets Y and Z with G reduced by omega over Y and then omega2 over Z
// equal to the subdimap H (each reduction absorbs the merged edge into its
// surviving partner, so both sets are subsets of E(G)). The underlying
// existence theorem makes failure a library bug.
inline std::pair<std::set<std::string>, std::set<std::string>> reduce_to_subdimap(
    const AlternatingDimap& g, const AlternatingDimap& h, int max_edges = 8) {
    if (g.edge_count() > max_edges)
        throw PreconditionError("SizeBoundExceeded: " + std::to_string(g.edge_count()) +
                                " edges exceeds the search bound");
    if (!is_subdimap(h, g))
        throw PreconditionError("the target is not a subdimap of the source");
    std::set<std::string> visited;
    std::optional<std::pair<std::set<std::string>, std::set<std::string>>> found;

    std::function<void(const AlternatingDimap&, int, std::set<std::string>&,
                       std::set<std::string>&)>
        dfs = [&](const AlternatingDimap& cur, int phase, std::set<std::string>& y,
                  std::set<std::string>& z) {
            if (found) return;
            std::string key = std::to_string(phase) + "|" + detail::exact_state_key(cur);
            if (!visited.insert(key).second) return;
            if (detail::exact_equal(cur, h)) {
                found = {y, z};
                return;
            }
            for (auto& id : cur.edge_ids()) {
                if (found) return;
                if (h.edges().count(id)) continue;  // target edges must survive
                if (phase == 1) {
                    y.insert(id);
                    dfs(detail::reduce_absorbing(cur, id, true), 1, y, z);
                    y.erase(id);
                }
                z.insert(id);
                dfs(detail::reduce_absorbing(cur, id, false), 2, y, z);
                z.erase(id);
            }
        };
    std::set<std::string> y, z;
    dfs(g, 1, y, z);
    if (!found)
        throw InternalCheckError("no omega/omega2 reduction of the source reaches the subdimap");
    return *found;
}

// Convenience replay for the two-phase normal form.
inline AlternatingDimap apply_reduction_sets(const AlternatingDimap& g,
                                             const std::set<std::string>& y,
                                             const std::set<std::string>& z) {
    AlternatingDimap cur = g;
    // Within each phase the members can be taken in any order that keeps them
    // present; absorbing reductions never drop an unprocessed member silently.
    std::set<std::string> ypend = y, zpend = z;
    auto run = [&](std::set<std::string>& pend, bool left) {
        while (!pend.empty()) {
            bool progressed = false;
            for (auto it = pend.begin(); it != pend.end();) {
                if (cur.edges().count(*it)) {
                    cur = detail::reduce_absorbing(cur, *it, left);
                    it = pend.erase(it);
                    progressed = true;
                } else {
                    ++it;
                }
            }
            if (!progressed)
                throw PreconditionError("reduction set member vanished before its turn");
        }
    };
    run(ypend, true);
    run(zpend, false);
    return cur;
}

}  // namespace adm
