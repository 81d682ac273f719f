#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adm/errors.hpp"

namespace adm {

// One side of an edge: the Out slot lives at the tail, the In slot at the head.
struct HalfEdge {
    std::string edge;
    bool out = false;

    bool operator==(const HalfEdge& o) const { return edge == o.edge && out == o.out; }
    bool operator!=(const HalfEdge& o) const { return !(*this == o); }
    bool operator<(const HalfEdge& o) const {
        return edge != o.edge ? edge < o.edge : out < o.out;
    }
    std::string str() const { return (out ? "+" : "-") + edge; }
};

struct EdgeEnds {
    std::string tail, head;
    bool operator==(const EdgeEnds& o) const { return tail == o.tail && head == o.head; }
};

// A raw embedded digraph: rotations are cyclic sequences of half-edges, stored
// anticlockwise as seen from the positive side of the surface.
struct EmbeddedDigraph {
    std::set<std::string> vertices;
    std::map<std::string, EdgeEnds> edges;
    std::map<std::string, std::vector<HalfEdge>> rotation;

    void add_vertex(const std::string& v) {
        vertices.insert(v);
        rotation.emplace(v, std::vector<HalfEdge>{});
    }
    void add_edge(const std::string& id, const std::string& tail, const std::string& head) {
        edges[id] = {tail, head};
    }
};

struct Face {
    enum Kind { Clockwise, Anticlockwise };
    Kind kind;
    std::vector<std::string> boundary;  // successor orbit, cyclic
};

struct DimapStats {
    int k = 0, is = 0, af = 0, cf = 0, edge_count = 0;
    std::map<std::string, int> genus;  // component representative -> genus
    int total_genus() const {
        int g = 0;
        for (auto& [_, v] : genus) g += v;
        return g;
    }
};

// (sigma1, sigma_omega, sigma_omega2) acting on edge indices 0..m-1. The
// composition convention is sigma_omega = sigma_omega2 . sigma1 (sigma1
// applied first): the left successor of e is the right successor of the next
// in-edge at head(e), which is immediate from the slot layout around a
// vertex. Cycles of the three permutations are the in-stars, anticlockwise
// faces and clockwise faces respectively.
struct PermutationTriple {
    std::vector<std::string> labels;  // index -> edge id
    std::vector<int> s1, sw, sw2;

    int size() const { return static_cast<int>(labels.size()); }
};

namespace detail {

inline std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); i++) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline bool is_perm(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline int count_cycles(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int c = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (seen[i]) continue;
        c++;
        for (int j = static_cast<int>(i); !seen[j]; j = p[j]) seen[j] = 1;
    }
    return c;
}

// Cyclic sequence equality (no distinguished start).
template <class T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t off = 0; off < b.size(); off++) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; i++)
            if (!(a[i] == b[(i + off) % b.size()])) ok = false;
        if (ok) return true;
    }
    return false;
}

struct UnionFind {
    std::map<std::string, std::string> parent;
    const std::string& find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return parent.find(x)->first;
        }
        if (it->second == x) return it->second;
        it->second = find(it->second);
        return it->second;
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[std::min(ra, rb) == ra ? rb : ra] = std::min(ra, rb);
    }
};

}  // namespace detail

// Component count, face count (dart tracing) and total genus of a raw embedded
// digraph. Works whether or not rotations alternate; isolated vertices count
// as genus-0 sphere components.
struct EmbeddedStats {
    int k = 0, faces = 0;
    int total_genus = 0;
};

inline EmbeddedStats embedded_stats(const EmbeddedDigraph& g) {
    detail::UnionFind uf;
    for (auto& v : g.vertices) uf.find(v);
    for (auto& [id, e] : g.edges) uf.unite(e.tail, e.head);

    // Darts: (edge, at-head?) pairs. rho follows the stored rotation; alpha
    // swaps the two darts of an edge; faces are orbits of rho∘alpha.
    std::map<std::pair<std::string, bool>, std::pair<std::string, bool>> rho;
    for (auto& [v, rot] : g.rotation) {
        if (rot.empty()) continue;
        for (size_t i = 0; i < rot.size(); i++) {
            const HalfEdge& cur = rot[i];
            const HalfEdge& nxt = rot[(i + 1) % rot.size()];
            rho[{cur.edge, !cur.out}] = {nxt.edge, !nxt.out};
        }
    }
    std::map<std::string, std::pair<int, int>> comp_ve;  // rep -> (V, E)
    std::map<std::string, int> comp_faces;
    for (auto& v : g.vertices) comp_ve[uf.find(v)].first++;
    for (auto& [id, e] : g.edges) comp_ve[uf.find(e.tail)].second++;
    std::set<std::pair<std::string, bool>> seen;
    for (auto& [d0, _] : rho) {
        if (seen.count(d0)) continue;
        auto d = d0;
        do {
            seen.insert(d);
            auto alpha = std::make_pair(d.first, !d.second);
            auto it = rho.find(alpha);
            if (it == rho.end())
                throw InternalCheckError("DanglingHalfEdge: edge '" + d.first +
                                         "' missing a rotation slot");
            d = it->second;
        } while (d != d0);
        const std::string& rep = uf.find(g.edges.at(d0.first).tail);
        comp_faces[rep]++;
    }
    EmbeddedStats r;
    for (auto& [rep, ve] : comp_ve) {
        r.k++;
        int F = ve.second == 0 ? 1 : comp_faces[rep];
        int euler = ve.first - ve.second + F;
        int twice_g = 2 - euler;
        if (twice_g < 0 || twice_g % 2 != 0)
            throw InternalCheckError("NonIntegerGenus in component " + rep);
        r.faces += F;
        r.total_genus += twice_g / 2;
    }
    return r;
}

// A validated alternating dimap. Immutable after construction; carries the
// three successor permutations computed from the rotation system.
class AlternatingDimap {
  public:
    static AlternatingDimap validate(const EmbeddedDigraph& raw) {
        // Every edge has exactly one Out slot (at its tail) and one In slot
        // (at its head); rotations alternate; no isolated vertices.
        std::map<std::string, int> out_count, in_count;
        for (auto& [v, rot] : raw.rotation) {
            if (raw.vertices.count(v) == 0)
                throw ValidationError("rotation given for unknown vertex '" + v + "'");
            if (rot.empty()) throw ValidationError("IsolatedVertex: '" + v + "'");
            if (rot.size() % 2 != 0) throw ValidationError("OddDegree at vertex '" + v + "'");
            for (size_t i = 0; i < rot.size(); i++) {
                auto eit = raw.edges.find(rot[i].edge);
                if (eit == raw.edges.end())
                    throw ValidationError("DanglingHalfEdge: unknown edge '" + rot[i].edge + "'");
                const std::string& want = rot[i].out ? eit->second.tail : eit->second.head;
                if (want != v)
                    throw ValidationError("DanglingHalfEdge: slot " + rot[i].str() +
                                          " at wrong vertex '" + v + "'");
                if (rot[i].out == rot[(i + 1) % rot.size()].out)
                    throw ValidationError("AlternationViolation at vertex '" + v + "'");
                (rot[i].out ? out_count : in_count)[rot[i].edge]++;
            }
        }
        for (auto& v : raw.vertices)
            if (raw.rotation.find(v) == raw.rotation.end() || raw.rotation.at(v).empty())
                throw ValidationError("IsolatedVertex: '" + v + "'");
        for (auto& [id, e] : raw.edges) {
            if (out_count[id] != 1 || in_count[id] != 1)
                throw ValidationError((out_count[id] > 1 || in_count[id] > 1
                                           ? std::string("DuplicateSlot: '")
                                           : std::string("DanglingHalfEdge: '")) +
                                      id + "'");
        }
        return AlternatingDimap(raw);
    }

    const EmbeddedDigraph& graph() const { return g_; }
    const std::set<std::string>& vertices() const { return g_.vertices; }
    const std::map<std::string, EdgeEnds>& edges() const { return g_.edges; }
    int edge_count() const { return static_cast<int>(g_.edges.size()); }
    bool empty() const { return g_.vertices.empty(); }

    const std::string& tail(const std::string& e) const { return g_.edges.at(e).tail; }
    const std::string& head(const std::string& e) const { return g_.edges.at(e).head; }

    // Successor maps: sigma1 = next incoming edge at head(e) in rotation
    // order; sigma_omega = left successor; sigma_omega2 = right successor.
    const std::string& sigma1(const std::string& e) const { return s1_.at(e); }
    const std::string& sigma_omega(const std::string& e) const { return sw_.at(e); }
    const std::string& sigma_omega2(const std::string& e) const { return sw2_.at(e); }

    int degree(const std::string& v) const {
        return static_cast<int>(g_.rotation.at(v).size());
    }

    std::vector<std::string> edge_ids() const {
        std::vector<std::string> ids;
        for (auto& [id, _] : g_.edges) ids.push_back(id);
        return ids;
    }

  private:
    explicit AlternatingDimap(EmbeddedDigraph g) : g_(std::move(g)) {
        for (auto& [v, rot] : g_.rotation) {
            int n = static_cast<int>(rot.size());
            for (int i = 0; i < n; i++) {
                if (rot[i].out) continue;
                const std::string& e = rot[i].edge;
                sw_[e] = rot[(i + 1) % n].edge;
                sw2_[e] = rot[(i - 1 + n) % n].edge;
                s1_[e] = rot[(i + 2) % n].edge;
            }
        }
    }

    EmbeddedDigraph g_;
    std::map<std::string, std::string> s1_, sw_, sw2_;
};

inline AlternatingDimap empty_dimap() { return AlternatingDimap::validate(EmbeddedDigraph{}); }

// Clockwise faces are right-successor orbits, anticlockwise faces are
// left-successor orbits. Boundaries start at their least edge id.
inline std::pair<std::vector<Face>, std::vector<Face>> faces(const AlternatingDimap& d) {
    auto trace = [&](bool clockwise) {
        std::vector<Face> fs;
        std::set<std::string> seen;
        for (auto& [id, _] : d.edges()) {
            if (seen.count(id)) continue;
            Face f;
            f.kind = clockwise ? Face::Clockwise : Face::Anticlockwise;
            std::string e = id;
            do {
                f.boundary.push_back(e);
                seen.insert(e);
                e = clockwise ? d.sigma_omega2(e) : d.sigma_omega(e);
            } while (e != id);
            fs.push_back(std::move(f));
        }
        return fs;
    };
    return {trace(true), trace(false)};
}

inline DimapStats stats(const AlternatingDimap& d) {
    DimapStats st;
    st.edge_count = d.edge_count();
    st.is = static_cast<int>(d.vertices().size());
    detail::UnionFind uf;
    for (auto& v : d.vertices()) uf.find(v);
    for (auto& [id, e] : d.edges()) uf.unite(e.tail, e.head);
    auto [cw, acw] = faces(d);
    st.cf = static_cast<int>(cw.size());
    st.af = static_cast<int>(acw.size());
    std::map<std::string, std::array<int, 4>> comp;  // rep -> (V, E, af, cf)
    for (auto& v : d.vertices()) comp[uf.find(v)][0]++;
    for (auto& [id, e] : d.edges()) comp[uf.find(e.tail)][1]++;
    for (auto& f : acw) comp[uf.find(d.head(f.boundary[0]))][2]++;
    for (auto& f : cw) comp[uf.find(d.head(f.boundary[0]))][3]++;
    for (auto& [rep, c] : comp) {
        st.k++;
        int euler = c[0] + c[2] + c[3] - c[1];
        int twice_g = 2 - euler;
        if (twice_g < 0 || twice_g % 2 != 0)
            throw InternalCheckError("NonIntegerGenus in component " + rep);
        st.genus[rep] = twice_g / 2;
    }
    return st;
}

inline PermutationTriple to_triple(const AlternatingDimap& d) {
    PermutationTriple t;
    std::map<std::string, int> idx;
    for (auto& [id, _] : d.edges()) {
        idx[id] = static_cast<int>(t.labels.size());
        t.labels.push_back(id);
    }
    int m = t.size();
    t.s1.resize(m);
    t.sw.resize(m);
    t.sw2.resize(m);
    for (auto& [id, i] : idx) {
        t.s1[i] = idx.at(d.sigma1(id));
        t.sw[i] = idx.at(d.sigma_omega(id));
        t.sw2[i] = idx.at(d.sigma_omega2(id));
    }
    return t;
}

// Build a triple from the two generators; the right-successor map is forced
// by the composition convention: sigma_omega2(sigma1(e)) = sigma_omega(e).
inline PermutationTriple triple_from_generators(std::vector<std::string> labels,
                                                std::vector<int> s1, std::vector<int> sw) {
    PermutationTriple t;
    t.labels = std::move(labels);
    t.s1 = std::move(s1);
    t.sw = std::move(sw);
    t.sw2.resize(t.s1.size());
    for (size_t i = 0; i < t.s1.size(); i++) t.sw2[t.s1[i]] = t.sw[i];
    return t;
}

inline void check_triple(const PermutationTriple& t) {
    int m = t.size();
    if (static_cast<int>(t.s1.size()) != m || static_cast<int>(t.sw.size()) != m ||
        static_cast<int>(t.sw2.size()) != m)
        throw ValidationError("ProductNotIdentity: permutation size mismatch");
    if (!detail::is_perm(t.s1) || !detail::is_perm(t.sw) || !detail::is_perm(t.sw2))
        throw ValidationError("ProductNotIdentity: not a permutation");
    for (int e = 0; e < m; e++)
        if (t.sw2[t.s1[e]] != t.sw[e])
            throw ValidationError(
                "ProductNotIdentity: triple violates sigma_omega = sigma_omega2 . sigma1");
}

// Rebuild the rotation system: each sigma1 cycle is a vertex whose rotation
// interleaves [In e, Out sigma_omega(e)] around the cycle.
inline AlternatingDimap from_triple(const PermutationTriple& t) {
    check_triple(t);
    EmbeddedDigraph g;
    int m = t.size();
    std::vector<int> vertex_of(m, -1);
    std::vector<std::vector<int>> cycles;
    for (int e = 0; e < m; e++) {
        if (vertex_of[e] >= 0) continue;
        std::vector<int> cyc;
        for (int j = e; vertex_of[j] < 0; j = t.s1[j]) {
            vertex_of[j] = static_cast<int>(cycles.size());
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    auto vname = [&](int ci) { return "v" + std::to_string(ci + 1); };
    for (size_t ci = 0; ci < cycles.size(); ci++) g.add_vertex(vname(static_cast<int>(ci)));
    // head of e = vertex of its sigma1 cycle; tail of sigma_omega(e) likewise.
    std::vector<int> tail_of(m, -1);
    for (int e = 0; e < m; e++) tail_of[t.sw[e]] = vertex_of[e];
    for (int e = 0; e < m; e++)
        g.add_edge(t.labels[e], vname(tail_of[e]), vname(vertex_of[e]));
    for (size_t ci = 0; ci < cycles.size(); ci++) {
        auto& rot = g.rotation[vname(static_cast<int>(ci))];
        for (int e : cycles[ci]) {
            rot.push_back({t.labels[e], false});
            rot.push_back({t.labels[t.sw[e]], true});
        }
    }
    return AlternatingDimap::validate(g);
}

// Canonical form: per connected component, the lexicographically least BFS
// trace over generators (sigma1, sigma_omega); components sorted. Equal for
// two dimaps iff they are isomorphic (edge bijections commuting with the
// permutations, componentwise).
struct CanonicalForm {
    std::string key;
    bool operator==(const CanonicalForm& o) const { return key == o.key; }
    bool operator!=(const CanonicalForm& o) const { return key != o.key; }
    bool operator<(const CanonicalForm& o) const { return key < o.key; }
};

inline std::string canonical_component_trace(const PermutationTriple& t,
                                             const std::vector<int>& comp) {
    std::string best;
    std::vector<int> label(t.size(), -1);
    for (int start : comp) {
        for (int e : comp) label[e] = -1;
        std::vector<int> order;
        label[start] = 0;
        order.push_back(start);
        for (size_t q = 0; q < order.size(); q++) {
            int e = order[q];
            for (int nb : {t.s1[e], t.sw[e]}) {
                if (label[nb] < 0) {
                    label[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        std::string trace;
        trace.reserve(order.size() * 8);
        for (int e : order) {
            trace += std::to_string(label[t.s1[e]]);
            trace += ',';
            trace += std::to_string(label[t.sw[e]]);
            trace += ';';
        }
        if (best.empty() || trace < best) best = std::move(trace);
    }
    return best;
}

inline CanonicalForm canonical_form(const PermutationTriple& t) {
    check_triple(t);
    int m = t.size();
    std::vector<int> comp_of(m, -1);
    std::vector<std::vector<int>> comps;
    for (int e = 0; e < m; e++) {
        if (comp_of[e] >= 0) continue;
        std::vector<int> stack{e}, comp;
        comp_of[e] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int nb : {t.s1[x], t.sw[x]}) {
                if (comp_of[nb] < 0) {
                    comp_of[nb] = comp_of[e];
                    stack.push_back(nb);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    // Image-closure alone can miss preimages when starting mid-cycle; take
    // closure under inverses as well to be safe.
    auto inv1 = detail::inverse_perm(t.s1);
    auto invw = detail::inverse_perm(t.sw);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < m; e++) {
            for (int nb : {t.s1[e], t.sw[e], inv1[e], invw[e]}) {
                if (comp_of[nb] != comp_of[e]) {
                    int a = std::min(comp_of[nb], comp_of[e]);
                    int from = std::max(comp_of[nb], comp_of[e]);
                    for (int x = 0; x < m; x++)
                        if (comp_of[x] == from) comp_of[x] = a;
                    changed = true;
                }
            }
        }
    }
    std::map<int, std::vector<int>> grouped;
    for (int e = 0; e < m; e++) grouped[comp_of[e]].push_back(e);
    std::vector<std::string> traces;
    for (auto& [_, comp] : grouped) traces.push_back(canonical_component_trace(t, comp));
    std::sort(traces.begin(), traces.end());
    CanonicalForm cf;
    for (auto& s : traces) cf.key += s + "|";
    return cf;
}

inline CanonicalForm canonical_form(const AlternatingDimap& d) {
    return canonical_form(to_triple(d));
}

inline bool is_isomorphic(const AlternatingDimap& a, const AlternatingDimap& b) {
    return canonical_form(a) == canonical_form(b);
}

// Keep only the given edges; rotations induced by slot deletion. The result
// may fail alternation, in which case there is no induced subdimap.
inline EmbeddedDigraph induced_embedded(const EmbeddedDigraph& g,
                                        const std::set<std::string>& keep_edges) {
    EmbeddedDigraph h;
    for (auto& [id, e] : g.edges)
        if (keep_edges.count(id)) {
            h.add_edge(id, e.tail, e.head);
            h.vertices.insert(e.tail);
            h.vertices.insert(e.head);
        }
    for (auto& v : h.vertices) {
        auto it = g.rotation.find(v);
        std::vector<HalfEdge> rot;
        if (it != g.rotation.end())
            for (auto& s : it->second)
                if (keep_edges.count(s.edge)) rot.push_back(s);
        h.rotation[v] = std::move(rot);
    }
    return h;
}

inline std::optional<AlternatingDimap> induced_subdimap(const AlternatingDimap& d,
                                                        const std::set<std::string>& keep) {
    try {
        return AlternatingDimap::validate(induced_embedded(d.graph(), keep));
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

inline bool is_subdimap(const AlternatingDimap& h, const AlternatingDimap& d) {
    if (h.empty()) return true;
    for (auto& v : h.vertices())
        if (!d.vertices().count(v)) return false;
    std::set<std::string> keep;
    for (auto& [id, e] : h.edges()) {
        auto it = d.edges().find(id);
        if (it == d.edges().end() || !(it->second == e)) return false;
        keep.insert(id);
    }
    EmbeddedDigraph ind = induced_embedded(d.graph(), keep);
    if (ind.vertices != h.vertices()) return false;
    for (auto& v : h.vertices()) {
        if (!detail::cyclic_equal(h.graph().rotation.at(v), ind.rotation.at(v))) return false;
    }
    return true;
}

}  // namespace adm
