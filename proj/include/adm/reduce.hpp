#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "adm/core.hpp"
#include "adm/errors.hpp"

namespace adm {

// The eight-way edge classification, plus the underlying boolean flags.
struct EdgeClass {
    enum Kind {
        Ultraloop,
        Proper1Loop,
        ProperOmegaLoop,
        ProperOmega2Loop,
        Proper1Semiloop,
        ProperOmegaSemiloop,
        ProperOmega2Semiloop,
        ProperEdge,
    };
    Kind kind = ProperEdge;
    bool is1Loop = false, isOmegaLoop = false, isOmega2Loop = false;
    bool is1Semiloop = false, isOmegaSemiloop = false, isOmega2Semiloop = false;

    bool is_triloop() const { return is1Loop || isOmegaLoop || isOmega2Loop; }
};

inline const char* edge_class_name(EdgeClass::Kind k) {
    switch (k) {
        case EdgeClass::Ultraloop: return "ultraloop";
        case EdgeClass::Proper1Loop: return "proper-1-loop";
        case EdgeClass::ProperOmegaLoop: return "proper-omega-loop";
        case EdgeClass::ProperOmega2Loop: return "proper-omega2-loop";
        case EdgeClass::Proper1Semiloop: return "proper-1-semiloop";
        case EdgeClass::ProperOmegaSemiloop: return "proper-omega-semiloop";
        case EdgeClass::ProperOmega2Semiloop: return "proper-omega2-semiloop";
        default: return "proper-edge";
    }
}

enum class ReductionKind { One, Omega, Omega2, Star };

inline const char* reduction_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::One: return "1";
        case ReductionKind::Omega: return "omega";
        case ReductionKind::Omega2: return "omega2";
        default: return "*";
    }
}

namespace detail {

inline std::vector<HalfEdge>::iterator find_slot(std::vector<HalfEdge>& rot,
                                                 const std::string& e, bool out) {
    return std::find(rot.begin(), rot.end(), HalfEdge{e, out});
}

inline void erase_slot(EmbeddedDigraph& g, const std::string& v, const std::string& e,
                       bool out) {
    auto& rot = g.rotation.at(v);
    auto it = find_slot(rot, e, out);
    if (it == rot.end())
        throw InternalCheckError("missing slot " + HalfEdge{e, out}.str() + " at '" + v + "'");
    rot.erase(it);
}

inline std::string fresh_edge_id(const EmbeddedDigraph& g, std::string base) {
    while (g.edges.count(base)) base += "'";
    return base;
}

inline std::string fresh_vertex_id(const EmbeddedDigraph& g, std::string base) {
    while (g.vertices.count(base)) base += "'";
    return base;
}

inline void drop_empty_vertices(EmbeddedDigraph& g) {
    for (auto it = g.rotation.begin(); it != g.rotation.end();) {
        if (it->second.empty()) {
            g.vertices.erase(it->first);
            it = g.rotation.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace detail

// Remove both edges of a successor pair {e, f} with f the left or right
// successor of e. The two vacated slots at the shared vertex are adjacent, so
// alternation survives; vertices are kept even if isolated, since the result
// exists only to measure component and genus deltas.
inline EmbeddedDigraph delete_pair(const AlternatingDimap& d, const std::string& e,
                                   const std::string& f) {
    if (d.sigma_omega(e) != f && d.sigma_omega2(e) != f)
        throw PreconditionError("NotSuccessorPair: '" + f + "' is not a successor of '" + e +
                                "'");
    EmbeddedDigraph g = d.graph();
    for (auto& [v, rot] : g.rotation) {
        rot.erase(std::remove_if(rot.begin(), rot.end(),
                                 [&](const HalfEdge& s) { return s.edge == e || s.edge == f; }),
                  rot.end());
    }
    g.edges.erase(e);
    g.edges.erase(f);
    return g;
}

// Classify an edge. The multi-semiloop situation (two or more proper-semiloop
// flags at once, possible only at positive genus) is an error unless the
// caller opts into the precedence 1 > omega > omega2.
inline EdgeClass classify_edge(const AlternatingDimap& d, const std::string& e,
                               bool multi_semiloop_precedence = false) {
    if (!d.edges().count(e)) throw PreconditionError("unknown edge '" + e + "'");
    EdgeClass c;
    c.is1Loop = d.sigma1(e) == e;
    c.isOmegaLoop = d.sigma_omega(e) == e;
    c.isOmega2Loop = d.sigma_omega2(e) == e;
    c.is1Semiloop = d.tail(e) == d.head(e);

    auto pair_separates = [&](const std::string& partner) {
        if (partner == e) return false;
        EmbeddedStats before = embedded_stats(d.graph());
        EmbeddedStats after = embedded_stats(delete_pair(d, e, partner));
        return after.k > before.k || after.total_genus < before.total_genus;
    };
    c.isOmegaSemiloop = c.isOmega2Loop || pair_separates(d.sigma_omega2(e));
    c.isOmega2Semiloop = c.isOmegaLoop || pair_separates(d.sigma_omega(e));

    int loops = int(c.is1Loop) + int(c.isOmegaLoop) + int(c.isOmega2Loop);
    if (loops == 2) throw InternalCheckError("edge '" + e + "' has exactly two loop flags");
    if (loops == 3) {
        c.kind = EdgeClass::Ultraloop;
        return c;
    }
    if (c.is1Loop) {
        c.kind = EdgeClass::Proper1Loop;
        return c;
    }
    if (c.isOmegaLoop) {
        c.kind = EdgeClass::ProperOmegaLoop;
        return c;
    }
    if (c.isOmega2Loop) {
        c.kind = EdgeClass::ProperOmega2Loop;
        return c;
    }
    int semis = int(c.is1Semiloop) + int(c.isOmegaSemiloop) + int(c.isOmega2Semiloop);
    if (semis >= 2 && !multi_semiloop_precedence)
        throw PreconditionError("MultiSemiloop: edge '" + e +
                                "' carries several semiloop types");
    if (c.is1Semiloop)
        c.kind = EdgeClass::Proper1Semiloop;
    else if (c.isOmegaSemiloop)
        c.kind = EdgeClass::ProperOmegaSemiloop;
    else if (c.isOmega2Semiloop)
        c.kind = EdgeClass::ProperOmega2Semiloop;
    else
        c.kind = EdgeClass::ProperEdge;
    return c;
}

struct ReduceResult {
    AlternatingDimap dimap;
    std::vector<std::string> removed;       // edge ids no longer present
    std::optional<std::string> created;     // fresh edge id, if any
};

namespace detail {

inline AlternatingDimap revalidate(EmbeddedDigraph g, const char* op) {
    drop_empty_vertices(g);
    try {
        return AlternatingDimap::validate(g);
    } catch (const ValidationError& ex) {
        throw InternalCheckError(std::string("reduction '") + op +
                                 "' broke validity: " + ex.what());
    }
}

// Delete a triloop whose two slots are adjacent at one vertex.
inline ReduceResult delete_loop(const AlternatingDimap& d, const std::string& e) {
    EmbeddedDigraph g = d.graph();
    erase_slot(g, d.tail(e), e, true);
    erase_slot(g, d.head(e), e, false);
    g.edges.erase(e);
    return {revalidate(std::move(g), "delete"), {e}, std::nullopt};
}

// Contract a non-loop edge e = u -> v: merge the two rotations, reading v's
// slots from just after In e and then u's slots from just after Out e.
inline ReduceResult contract(const AlternatingDimap& d, const std::string& e) {
    const std::string u = d.tail(e), v = d.head(e);
    EmbeddedDigraph g = d.graph();
    auto& rv = g.rotation.at(v);
    auto& ru = g.rotation.at(u);
    auto start_after = [](std::vector<HalfEdge>& rot, const HalfEdge& at) {
        auto it = std::find(rot.begin(), rot.end(), at);
        std::vector<HalfEdge> out;
        size_t i = static_cast<size_t>(it - rot.begin());
        for (size_t k = 1; k < rot.size(); k++) out.push_back(rot[(i + k) % rot.size()]);
        return out;
    };
    std::vector<HalfEdge> merged = start_after(rv, {e, false});
    std::vector<HalfEdge> tailpart = start_after(ru, {e, true});
    merged.insert(merged.end(), tailpart.begin(), tailpart.end());
    g.rotation[u] = std::move(merged);
    g.rotation.erase(v);
    g.vertices.erase(v);
    g.edges.erase(e);
    for (auto& [id, ends] : g.edges) {
        if (ends.tail == v) ends.tail = u;
        if (ends.head == v) ends.head = u;
    }
    return {revalidate(std::move(g), "contract"), {e}, std::nullopt};
}

// Split the vertex of a 1-semiloop: slots strictly between Out e and In e go
// to one new vertex, the rest to another.
inline ReduceResult split_semiloop(const AlternatingDimap& d, const std::string& e) {
    const std::string v = d.head(e);
    EmbeddedDigraph g = d.graph();
    const auto rot = g.rotation.at(v);
    int n = static_cast<int>(rot.size());
    int out_pos = -1, in_pos = -1;
    for (int i = 0; i < n; i++) {
        if (rot[i].edge == e) (rot[i].out ? out_pos : in_pos) = i;
    }
    std::vector<HalfEdge> side_a, side_b;  // (Out e, In e) arc and (In e, Out e) arc
    for (int i = (out_pos + 1) % n; i != in_pos; i = (i + 1) % n) side_a.push_back(rot[i]);
    for (int i = (in_pos + 1) % n; i != out_pos; i = (i + 1) % n) side_b.push_back(rot[i]);
    if (side_a.empty() || side_b.empty())
        throw InternalCheckError("semiloop split with an empty side; '" + e +
                                 "' should have been a triloop");
    std::string va = fresh_vertex_id(g, v + ".a");
    std::string vb = fresh_vertex_id(g, v + ".b");
    g.vertices.erase(v);
    g.rotation.erase(v);
    g.edges.erase(e);
    g.add_vertex(va);
    g.add_vertex(vb);
    g.rotation[va] = side_a;
    g.rotation[vb] = side_b;
    for (auto& [vtx, slots] : {std::pair{va, side_a}, std::pair{vb, side_b}}) {
        for (auto& s : slots) {
            auto& ends = g.edges.at(s.edge);
            if (s.out) ends.tail = vtx;
            else ends.head = vtx;
        }
    }
    return {revalidate(std::move(g), "split"), {e}, std::nullopt};
}

// The omega / omega2 surgery: remove e and its left (right) successor p, and
// join their free slots by a fresh edge from tail(e) to head(p).
inline ReduceResult successor_surgery(const AlternatingDimap& d, const std::string& e,
                                      bool left) {
    const std::string p = left ? d.sigma_omega(e) : d.sigma_omega2(e);
    if (p == e)
        throw InternalCheckError("successor surgery on a self-successor edge '" + e + "'");
    EmbeddedDigraph g = d.graph();
    std::string np = fresh_edge_id(g, e + "~" + p);
    // The fresh edge takes over e's Out slot and p's In slot.
    *find_slot(g.rotation.at(d.tail(e)), e, true) = {np, true};
    *find_slot(g.rotation.at(d.head(p)), p, false) = {np, false};
    erase_slot(g, d.head(e), e, false);
    erase_slot(g, d.tail(p), p, true);
    g.add_edge(np, d.tail(e), d.head(p));
    g.edges.erase(e);
    g.edges.erase(p);
    return {revalidate(std::move(g), left ? "omega" : "omega2"), {e, p}, np};
}

}  // namespace detail

inline ReduceResult reduce_detail(const AlternatingDimap& d, const std::string& e,
                                  ReductionKind mu) {
    if (!d.edges().count(e)) throw PreconditionError("unknown edge '" + e + "'");
    bool loop_w = d.sigma_omega(e) == e;
    bool loop_w2 = d.sigma_omega2(e) == e;
    if (mu == ReductionKind::Star && !(loop_w || loop_w2 || d.sigma1(e) == e))
        throw PreconditionError("star reduction requires a triloop, '" + e + "' is not one");
    if (loop_w || loop_w2) return detail::delete_loop(d, e);
    switch (mu) {
        case ReductionKind::One:
        case ReductionKind::Star:
            return d.tail(e) == d.head(e) ? detail::split_semiloop(d, e)
                                          : detail::contract(d, e);
        case ReductionKind::Omega:
            return detail::successor_surgery(d, e, true);
        default:
            return detail::successor_surgery(d, e, false);
    }
}

inline AlternatingDimap reduce(const AlternatingDimap& d, const std::string& e,
                               ReductionKind mu) {
    return reduce_detail(d, e, mu).dimap;
}

using EdgeOrdering = std::vector<std::string>;

// Reduce the first edge of the ordering; surviving edges keep their position,
// a fresh edge (omega / omega2 case) is appended at the end.
inline std::pair<AlternatingDimap, EdgeOrdering> reduce_first(const AlternatingDimap& d,
                                                              const EdgeOrdering& order,
                                                              ReductionKind mu) {
    if (order.empty()) throw PreconditionError("empty ordering");
    ReduceResult r = reduce_detail(d, order.front(), mu);
    EdgeOrdering next;
    for (auto& id : order)
        if (std::find(r.removed.begin(), r.removed.end(), id) == r.removed.end())
            next.push_back(id);
    if (r.created) next.push_back(*r.created);
    return {std::move(r.dimap), std::move(next)};
}

// Repeatedly contract edges lying on oversized clockwise (anticlockwise)
// faces until every such face has size exactly two.
inline AlternatingDimap contract_faces_to_digons(AlternatingDimap d, bool clockwise) {
    for (int guard = d.edge_count() + 1; guard >= 0; guard--) {
        auto [cw, acw] = faces(d);
        const std::vector<Face>& fs = clockwise ? cw : acw;
        for (auto& f : fs)
            if (f.boundary.size() == 1)
                throw PreconditionError("FaceOfSizeOne at edge '" + f.boundary[0] + "'");
        const Face* big = nullptr;
        for (auto& f : fs)
            if (f.boundary.size() > 2) {
                big = &f;
                break;
            }
        if (!big) return d;
        std::string pick;
        for (auto& e : big->boundary)
            if (d.tail(e) != d.head(e) && (pick.empty() || e < pick)) pick = e;
        if (pick.empty())
            throw PreconditionError("no contractible edge on an oversized face");
        d = detail::contract(d, pick).dimap;
    }
    throw InternalCheckError("face contraction did not terminate");
}

inline AlternatingDimap contract_cfaces_to_digons(const AlternatingDimap& d) {
    return contract_faces_to_digons(d, true);
}
inline AlternatingDimap contract_afaces_to_digons(const AlternatingDimap& d) {
    return contract_faces_to_digons(d, false);
}

// Replace e = u -> v by a directed two-path through a fresh degree-2 vertex;
// e keeps its identity as the first segment.
inline AlternatingDimap subdivide(const AlternatingDimap& d, const std::string& e) {
    if (!d.edges().count(e)) throw PreconditionError("unknown edge '" + e + "'");
    EmbeddedDigraph g = d.graph();
    std::string w = detail::fresh_vertex_id(g, d.head(e) + ".s");
    std::string f = detail::fresh_edge_id(g, e + ".s");
    *detail::find_slot(g.rotation.at(d.head(e)), e, false) = {f, false};
    g.add_vertex(w);
    g.rotation[w] = {{e, false}, {f, true}};
    g.add_edge(f, w, d.head(e));
    g.edges.at(e).head = w;
    return detail::revalidate(std::move(g), "subdivide");
}

}  // namespace adm
