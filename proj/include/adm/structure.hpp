#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adm/core.hpp"
#include "adm/errors.hpp"
#include "adm/invariants.hpp"
#include "adm/planegraph.hpp"
#include "adm/reduce.hpp"

namespace adm {

// ---- blocks and cutvertices -------------------------------------------------

struct Block {
    std::set<std::string> edges;
    std::set<std::string> vertices;

    bool is_loop() const { return edges.size() == 1 && vertices.size() == 1; }
};

// Biconnected components of the underlying multigraph. Every loop is a block
// of its own; parallel edges stay together.
inline std::vector<Block> blocks(const AlternatingDimap& d) {
    std::vector<Block> out;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;
    for (auto& [id, e] : d.edges()) {
        if (e.tail == e.head) {
            Block b;
            b.edges.insert(id);
            b.vertices.insert(e.tail);
            out.push_back(std::move(b));
        } else {
            adj[e.tail].push_back({id, e.head});
            adj[e.head].push_back({id, e.tail});
        }
    }
    std::map<std::string, int> disc, low;
    std::vector<std::pair<std::string, std::string>> edge_stack;  // (edge, lower endpoint)
    int timer = 0;
    std::function<void(const std::string&, const std::string&)> dfs =
        [&](const std::string& v, const std::string& via_edge) {
            disc[v] = low[v] = timer++;
            for (auto& [id, w] : adj[v]) {
                if (id == via_edge) continue;
                if (!disc.count(w)) {
                    edge_stack.push_back({id, v});
                    dfs(w, id);
                    low[v] = std::min(low[v], low[w]);
                    if (low[w] >= disc[v]) {
                        Block b;
                        while (true) {
                            auto [eid, lv] = edge_stack.back();
                            edge_stack.pop_back();
                            b.edges.insert(eid);
                            b.vertices.insert(d.tail(eid));
                            b.vertices.insert(d.head(eid));
                            if (eid == id) break;
                        }
                        out.push_back(std::move(b));
                    }
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back({id, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            }
        };
    for (auto& v : d.vertices())
        if (!disc.count(v) && adj.count(v)) dfs(v, "");
    return out;
}

// A cutvertex is a vertex lying in two or more blocks (loop blocks count).
inline std::set<std::string> cutvertices(const AlternatingDimap& d) {
    std::map<std::string, int> in_blocks;
    for (auto& b : blocks(d))
        for (auto& v : b.vertices) in_blocks[v]++;
    std::set<std::string> cuts;
    for (auto& [v, n] : in_blocks)
        if (n >= 2) cuts.insert(v);
    return cuts;
}

// ---- corner regions ---------------------------------------------------------
//
// Nesting ("within a face") is decided combinatorially through rotation
// corners: remove a reference edge set B and see which gap between two
// consecutive B-slots the rest of the component hangs in. Regions are the
// connected pieces of the complement, where at a vertex carrying B-slots only
// slots inside the same gap are mutually reachable.

namespace detail {

// A corner of B is identified by the vertex and the rotation position of the
// B-slot that precedes the gap; vertices without B-slots use position -1.
using CornerKey = std::pair<std::string, int>;

struct CornerRegions {
    std::map<CornerKey, std::string> region_of_corner;
    std::map<std::string, std::string> region_of_edge;  // non-B edges only
};

inline CornerRegions corner_regions(const AlternatingDimap& d,
                                    const std::set<std::string>& b) {
    CornerRegions cr;
    UnionFind uf;
    auto corner_name = [](const CornerKey& c) {
        return c.first + "#" + std::to_string(c.second);
    };
    std::map<std::pair<std::string, bool>, CornerKey> corner_of_slot;  // non-B slots
    for (auto& [v, rot] : d.graph().rotation) {
        int n = static_cast<int>(rot.size());
        std::vector<int> bpos;
        for (int i = 0; i < n; i++)
            if (b.count(rot[i].edge)) bpos.push_back(i);
        if (bpos.empty()) {
            CornerKey key{v, -1};
            uf.find(corner_name(key));
            for (int i = 0; i < n; i++) corner_of_slot[{rot[i].edge, rot[i].out}] = key;
            cr.region_of_corner[key];  // placeholder, filled below
        } else {
            for (int p : bpos) {
                CornerKey key{v, p};
                uf.find(corner_name(key));
                cr.region_of_corner[key];
            }
            for (int i = 0; i < n; i++) {
                if (b.count(rot[i].edge)) continue;
                // preceding B-slot, scanning backwards cyclically
                int p = -1;
                for (int step = 1; step < n; step++) {
                    int j = (i - step + n) % n;
                    if (b.count(rot[j].edge)) {
                        p = j;
                        break;
                    }
                }
                corner_of_slot[{rot[i].edge, rot[i].out}] = {v, p};
            }
        }
    }
    for (auto& [id, e] : d.edges()) {
        if (b.count(id)) continue;
        uf.unite(corner_name(corner_of_slot.at({id, true})),
                 corner_name(corner_of_slot.at({id, false})));
    }
    for (auto& [key, rep] : cr.region_of_corner) rep = uf.find(corner_name(key));
    for (auto& [id, e] : d.edges()) {
        if (b.count(id)) continue;
        cr.region_of_edge[id] = uf.find(corner_name(corner_of_slot.at({id, true})));
    }
    return cr;
}

inline bool same_dimap_component(const AlternatingDimap& d,
                                 const std::set<std::string>& e1,
                                 const std::set<std::string>& e2) {
    UnionFind uf;
    for (auto& [id, e] : d.edges()) uf.unite(e.tail, e.head);
    std::set<std::string> reps;
    for (auto& id : e1) reps.insert(uf.find(d.tail(id)));
    for (auto& id : e2)
        if (reps.count(uf.find(d.tail(id)))) return true;
    return false;
}

}  // namespace detail

// The corners of B (as rotation positions) whose region contains some target
// edge. On a sphere a connected target set hangs in exactly one corner.
inline std::vector<detail::CornerKey> corners_reaching(const AlternatingDimap& d,
                                                       const std::set<std::string>& b,
                                                       const std::set<std::string>& targets) {
    detail::CornerRegions cr = detail::corner_regions(d, b);
    std::set<std::string> regions;
    for (auto& t : targets) {
        auto it = cr.region_of_edge.find(t);
        if (it == cr.region_of_edge.end())
            throw PreconditionError("target edge '" + t + "' is missing or inside the barrier");
        regions.insert(it->second);
    }
    std::vector<detail::CornerKey> out;
    for (auto& [key, rep] : cr.region_of_corner)
        if (key.second >= 0 && regions.count(rep)) out.push_back(key);
    return out;
}

// The faces of the induced subdimap on b2 within which b1 lies.
inline std::vector<Face> enclosing_faces(const AlternatingDimap& d,
                                         const std::set<std::string>& b1,
                                         const std::set<std::string>& b2) {
    if (!detail::same_dimap_component(d, b1, b2))
        throw PreconditionError("DifferentComponents: nesting is undefined across components");
    auto ind = induced_subdimap(d, b2);
    if (!ind)
        throw PreconditionError("edge set does not induce an alternating subdimap");
    auto [cw, acw] = faces(*ind);
    auto face_with = [&](bool clockwise, const std::string& e) -> const Face& {
        for (auto& f : clockwise ? cw : acw)
            if (std::find(f.boundary.begin(), f.boundary.end(), e) != f.boundary.end())
                return f;
        throw InternalCheckError("edge '" + e + "' missing from face trace");
    };
    std::vector<Face> out;
    auto push_unique = [&](const Face& f) {
        for (auto& g : out)
            if (g.kind == f.kind && std::set<std::string>(g.boundary.begin(), g.boundary.end()) ==
                                        std::set<std::string>(f.boundary.begin(), f.boundary.end()))
                return;
        out.push_back(f);
    };
    for (auto& [v, p] : corners_reaching(d, b2, b1)) {
        const HalfEdge& s = d.graph().rotation.at(v)[p];
        // The gap after an In slot lies on an anticlockwise face of the
        // induced subdimap, the gap after an Out slot on a clockwise one.
        if (s.out)
            push_unique(face_with(true, s.edge));
        else
            push_unique(face_with(false, s.edge));
    }
    return out;
}

inline bool within_face(const AlternatingDimap& d, const std::set<std::string>& b1,
                        const std::set<std::string>& b2, const Face& g) {
    std::set<std::string> gset(g.boundary.begin(), g.boundary.end());
    for (auto& f : enclosing_faces(d, b1, b2)) {
        if (f.kind != g.kind) continue;
        if (std::set<std::string>(f.boundary.begin(), f.boundary.end()) == gset) return true;
    }
    return false;
}

// ---- cycle blocks -----------------------------------------------------------

// A block whose edges form a single directed cycle (every vertex has in- and
// out-degree one inside the block). Size one means a loop.
inline bool is_cycle_block(const AlternatingDimap& d, const Block& b) {
    if (b.edges.size() != b.vertices.size()) return false;
    std::map<std::string, int> indeg, outdeg;
    for (auto& id : b.edges) {
        indeg[d.head(id)]++;
        outdeg[d.tail(id)]++;
    }
    for (auto& v : b.vertices)
        if (indeg[v] != 1 || outdeg[v] != 1) return false;
    return true;  // blocks are connected, so balanced degrees force one cycle
}

namespace detail {

inline std::vector<Block> cycle_blocks_with_free_face(const AlternatingDimap& d,
                                                      bool clockwise) {
    std::vector<Block> out;
    auto [cw, acw] = faces(d);
    std::set<std::set<std::string>> face_sets;
    for (auto& f : clockwise ? cw : acw)
        face_sets.insert(std::set<std::string>(f.boundary.begin(), f.boundary.end()));
    for (auto& b : blocks(d))
        if (is_cycle_block(d, b) && face_sets.count(b.edges)) out.push_back(b);
    return out;
}

}  // namespace detail

// Cycle blocks whose edge set forms, entirely by itself, the boundary of a
// clockwise (resp. anticlockwise) face of D. A standalone cycle qualifies for
// both roles.
inline std::vector<Block> c_cycle_blocks(const AlternatingDimap& d) {
    return detail::cycle_blocks_with_free_face(d, true);
}
inline std::vector<Block> a_cycle_blocks(const AlternatingDimap& d) {
    return detail::cycle_blocks_with_free_face(d, false);
}

// ---- multiloops -------------------------------------------------------------

struct Multiloop {
    std::string vertex;
    std::vector<std::string> loops;
    enum Kind { CMultiloop, AMultiloop, Either, Neither } kind = Neither;

    int size() const { return static_cast<int>(loops.size()); }
};

namespace detail {

// A loop nest M qualifies as a c-multiloop in place when every face crossing
// the nest boundary is anticlockwise and some clockwise face lies wholly
// inside the nest (the face formed by consecutive loops; for size one this is
// the singleton clockwise face of a proper omega2-loop). Several interface
// faces are possible: a nest may enclose further structure, as happens for
// the image of an undirected loop drawn around other edges.
inline bool multiloop_ok(const AlternatingDimap& d,
                         const std::pair<std::vector<Face>, std::vector<Face>>& fs,
                         const std::set<std::string>& m, bool cside) {
    bool inner_found = false;
    auto scan = [&](const std::vector<Face>& list, bool is_inner_kind, bool is_outer_kind) {
        for (auto& f : list) {
            int hit = 0;
            for (auto& e : f.boundary) hit += m.count(e) ? 1 : 0;
            if (hit == 0) continue;
            if (hit == static_cast<int>(f.boundary.size())) {
                if (is_inner_kind) inner_found = true;
            } else if (!is_outer_kind) {
                return false;  // interface face of the wrong kind
            }
        }
        return true;
    };
    // c-multiloops expose a clockwise face inside and hang on anticlockwise
    // faces; a-multiloops are the mirror image.
    if (!scan(fs.first, cside, !cside)) return false;
    if (!scan(fs.second, !cside, cside)) return false;
    return inner_found;
}

}  // namespace detail

// Maximal loop nests: loops at one vertex chained together by shared faces of
// D that consist of loops only.
inline std::vector<Multiloop> multiloops(const AlternatingDimap& d) {
    auto fs = faces(d);
    std::map<std::string, std::vector<std::string>> loops_at;
    for (auto& [id, e] : d.edges())
        if (e.tail == e.head) loops_at[e.head].push_back(id);
    std::vector<Multiloop> out;
    for (auto& [v, loops] : loops_at) {
        std::set<std::string> lset(loops.begin(), loops.end());
        detail::UnionFind uf;
        for (auto& l : loops) uf.find(l);
        auto link = [&](const std::vector<Face>& list) {
            for (auto& f : list) {
                bool all = true;
                for (auto& e : f.boundary) all = all && lset.count(e);
                if (!all) continue;
                for (size_t i = 1; i < f.boundary.size(); i++)
                    uf.unite(f.boundary[0], f.boundary[i]);
            }
        };
        link(fs.first);
        link(fs.second);
        std::map<std::string, Multiloop> nests;
        for (auto& l : loops) {
            Multiloop& n = nests[uf.find(l)];
            n.vertex = v;
            n.loops.push_back(l);
        }
        for (auto& [rep, n] : nests) {
            std::sort(n.loops.begin(), n.loops.end());
            std::set<std::string> mset(n.loops.begin(), n.loops.end());
            bool c_ok = detail::multiloop_ok(d, fs, mset, true);
            bool a_ok = detail::multiloop_ok(d, fs, mset, false);
            n.kind = c_ok && a_ok ? Multiloop::Either
                     : c_ok      ? Multiloop::CMultiloop
                     : a_ok      ? Multiloop::AMultiloop
                                 : Multiloop::Neither;
            out.push_back(std::move(n));
        }
    }
    return out;
}

// ---- alt images -------------------------------------------------------------

namespace detail {

// Reverse the alt construction: possible iff every clockwise (anticlockwise)
// face is a digon of antiparallel edges and the rotation at each vertex
// decomposes into adjacent (Out leaving, In arriving) pairs per digon.
inline std::optional<PlaneGraph> alt_preimage(const AlternatingDimap& d, bool cside) {
    if (d.empty()) return PlaneGraph{};
    auto [cw, acw] = faces(d);
    std::map<std::string, std::string> partner;  // digon partner
    std::map<std::string, std::string> undirected;  // directed edge -> plane edge id
    PlaneGraph g;
    for (auto& f : cside ? cw : acw) {
        if (f.boundary.size() != 2) return std::nullopt;
        const std::string &e = f.boundary[0], &p = f.boundary[1];
        if (d.tail(e) != d.head(p) || d.head(e) != d.tail(p)) return std::nullopt;
        partner[e] = p;
        partner[p] = e;
        std::string id = std::min(e, p);
        undirected[e] = id;
        undirected[p] = id;
        if (e == std::min(e, p)) g.add_edge(id, d.tail(e), d.head(e));
    }
    for (auto& v : d.vertices()) g.add_vertex(v);
    for (auto& [v, rot] : d.graph().rotation) {
        int n = static_cast<int>(rot.size());
        // Out/In pairs for the c-side, In/Out for the a-side; two possible
        // phases of the cyclic rotation.
        auto try_phase = [&](int phase) -> std::optional<std::vector<PgSlot>> {
            std::vector<PgSlot> slots;
            std::map<std::string, int> seen;
            for (int i = phase; i < n + phase; i += 2) {
                const HalfEdge& first = rot[i % n];
                const HalfEdge& second = rot[(i + 1) % n];
                const HalfEdge& outgoing = first.out ? first : second;
                const HalfEdge& incoming = first.out ? second : first;
                if (cside != first.out) return std::nullopt;
                if (partner.at(outgoing.edge) != incoming.edge) return std::nullopt;
                std::string id = undirected.at(outgoing.edge);
                auto& ends = g.edges.at(id);
                int end;
                if (ends[0] == ends[1]) {
                    end = seen[id]++;  // loop: first visit end 0, second end 1
                } else {
                    end = ends[0] == v ? 0 : 1;
                }
                slots.push_back({id, end});
            }
            return slots;
        };
        auto s0 = try_phase(0);
        auto s1 = s0 ? std::optional<std::vector<PgSlot>>{} : try_phase(1);
        if (!s0 && !s1) return std::nullopt;
        g.rotation[v] = s0 ? *s0 : *s1;
    }
    validate_plane_graph(g);
    AlternatingDimap round_trip = cside ? alt_c(g) : alt_a(g);
    if (!is_isomorphic(round_trip, d))
        throw InternalCheckError("alt preimage failed its round trip");
    return g;
}

}  // namespace detail

inline std::optional<PlaneGraph> is_alt_c_image(const AlternatingDimap& d) {
    return detail::alt_preimage(d, true);
}
inline std::optional<PlaneGraph> is_alt_a_image(const AlternatingDimap& d) {
    return detail::alt_preimage(d, false);
}

// ---- c-simple / c-alternating recognition -----------------------------------

namespace detail {

// cside=true checks the clockwise reading (c-simple); false the mirror.
inline bool is_simple_side(const AlternatingDimap& d, bool cside, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    for (auto& [id, e] : d.edges())
        if (e.tail == e.head) return fail("loop '" + id + "' present");
    std::vector<Block> bs = blocks(d);
    for (auto& b : bs) {
        if (is_cycle_block(d, b)) continue;
        auto ind = induced_subdimap(d, b.edges);
        if (!ind) return fail("block does not induce a subdimap");
        if (!alt_preimage(*ind, cside))
            return fail("block '" + *b.edges.begin() + "' is neither a cycle block nor an alt image");
    }
    // no block inside a clockwise (cside) / anticlockwise face of another
    for (size_t i = 0; i < bs.size(); i++) {
        for (size_t j = 0; j < bs.size(); j++) {
            if (i == j || !same_dimap_component(d, bs[i].edges, bs[j].edges)) continue;
            for (auto& [v, p] : corners_reaching(d, bs[j].edges, bs[i].edges)) {
                bool corner_clockwise = d.graph().rotation.at(v)[p].out;
                if (corner_clockwise == cside)
                    return fail("a block lies within a forbidden face of another block");
            }
        }
    }
    return true;
}

// Exact cover of the loops at each vertex by nests passing multiloop_ok.
inline bool cover_loops(const AlternatingDimap& d,
                        const std::pair<std::vector<Face>, std::vector<Face>>& fs,
                        const std::vector<std::string>& loops, bool cside,
                        std::vector<std::vector<std::string>>* parts) {
    int n = static_cast<int>(loops.size());
    std::vector<std::set<std::string>> ok_subsets;
    for (int mask = 1; mask < (1 << n); mask++) {
        std::set<std::string> m;
        for (int i = 0; i < n; i++)
            if (mask & (1 << i)) m.insert(loops[i]);
        if (multiloop_ok(d, fs, m, cside)) ok_subsets.push_back(std::move(m));
    }
    std::set<std::string> covered;
    std::vector<std::vector<std::string>> chosen;
    std::function<bool()> solve = [&]() -> bool {
        std::string next;
        for (auto& l : loops)
            if (!covered.count(l)) {
                next = l;
                break;
            }
        if (next.empty()) return true;
        for (auto& m : ok_subsets) {
            if (!m.count(next)) continue;
            bool disjoint = true;
            for (auto& e : m) disjoint = disjoint && !covered.count(e);
            if (!disjoint) continue;
            covered.insert(m.begin(), m.end());
            chosen.push_back(std::vector<std::string>(m.begin(), m.end()));
            if (solve()) return true;
            chosen.pop_back();
            for (auto& e : m) covered.erase(e);
        }
        return false;
    };
    if (!solve()) return false;
    if (parts) parts->insert(parts->end(), chosen.begin(), chosen.end());
    return true;
}

}  // namespace detail

struct AlternatingCertificate {
    bool ok = false;
    std::string reason;
    // loop partition into multiloops (c-multiloops for the c-side reading)
    std::vector<Multiloop> nests;
};

inline AlternatingCertificate recognize_alternating(const AlternatingDimap& d, bool cside) {
    AlternatingCertificate cert;
    auto fs = faces(d);
    std::map<std::string, std::vector<std::string>> loops_at;
    std::set<std::string> loop_edges;
    for (auto& [id, e] : d.edges())
        if (e.tail == e.head) {
            loops_at[e.head].push_back(id);
            loop_edges.insert(id);
        }
    std::set<std::string> keep;
    for (auto& [id, e] : d.edges())
        if (!loop_edges.count(id)) keep.insert(id);
    AlternatingDimap core = empty_dimap();
    if (!keep.empty()) {
        auto ind = induced_subdimap(d, keep);
        if (!ind) {
            cert.reason = "removing the loops breaks alternation";
            return cert;
        }
        core = *ind;
    }
    if (!detail::is_simple_side(core, cside, &cert.reason)) return cert;
    std::vector<std::vector<std::string>> parts;
    for (auto& [v, loops] : loops_at) {
        if (!detail::cover_loops(d, fs, loops, cside, &parts)) {
            cert.reason = "loops at '" + v + "' do not decompose into " +
                          (cside ? std::string("c") : std::string("a")) + "-multiloops";
            return cert;
        }
    }
    for (auto& p : parts) {
        Multiloop m;
        m.vertex = d.head(p.front());
        m.loops = p;
        m.kind = cside ? Multiloop::CMultiloop : Multiloop::AMultiloop;
        cert.nests.push_back(std::move(m));
    }
    cert.ok = true;
    return cert;
}

inline bool is_c_simple(const AlternatingDimap& d) {
    return detail::is_simple_side(d, true, nullptr);
}
inline bool is_a_simple(const AlternatingDimap& d) {
    return detail::is_simple_side(d, false, nullptr);
}
inline bool is_c_alternating(const AlternatingDimap& d) {
    return recognize_alternating(d, true).ok;
}
inline bool is_a_alternating(const AlternatingDimap& d) {
    return recognize_alternating(d, false).ok;
}

// ---- c-block graph ----------------------------------------------------------

struct CBlockGraph {
    std::vector<Block> block_nodes;
    std::vector<std::string> cut_nodes;
    std::vector<std::pair<int, int>> edges;  // (cut index, block index)

    bool is_tree() const {
        size_t n = block_nodes.size() + cut_nodes.size();
        if (n == 0) return true;
        if (edges.size() != n - 1) return false;
        detail::UnionFind uf;
        auto cname = [](size_t i) { return "c" + std::to_string(i); };
        auto bname = [](size_t i) { return "b" + std::to_string(i); };
        for (size_t i = 0; i < cut_nodes.size(); i++) uf.find(cname(i));
        for (size_t i = 0; i < block_nodes.size(); i++) uf.find(bname(i));
        for (auto& [c, b] : edges) uf.unite(cname(c), bname(b));
        std::set<std::string> reps;
        for (size_t i = 0; i < cut_nodes.size(); i++) reps.insert(uf.find(cname(i)));
        for (size_t i = 0; i < block_nodes.size(); i++) reps.insert(uf.find(bname(i)));
        return reps.size() == 1;
    }
};

inline CBlockGraph c_block_graph(const AlternatingDimap& d) {
    if (stats(d).k != 1 || !is_c_alternating(d))
        throw PreconditionError("NotCAlternating: c-block graph needs a connected c-alternating dimap");
    CBlockGraph g;
    g.block_nodes = blocks(d);
    for (auto& v : cutvertices(d)) g.cut_nodes.push_back(v);
    for (size_t c = 0; c < g.cut_nodes.size(); c++)
        for (size_t b = 0; b < g.block_nodes.size(); b++)
            if (g.block_nodes[b].vertices.count(g.cut_nodes[c]))
                g.edges.push_back({static_cast<int>(c), static_cast<int>(b)});
    return g;
}

// ---- c-union ----------------------------------------------------------------

namespace detail {

// Copy s2's graph with vertex and edge ids renamed away from s1's.
inline EmbeddedDigraph rename_apart(const AlternatingDimap& s1, const AlternatingDimap& s2,
                                    std::map<std::string, std::string>* vmap_out) {
    EmbeddedDigraph g = s2.graph();
    std::map<std::string, std::string> emap, vmap;
    for (auto& [id, e] : g.edges) {
        std::string nid = id;
        while (s1.edges().count(nid) || (nid != id && g.edges.count(nid))) nid += "'";
        emap[id] = nid;
    }
    for (auto& v : g.vertices) {
        std::string nv = v;
        while (s1.vertices().count(nv) || (nv != v && g.vertices.count(nv))) nv += "'";
        vmap[v] = nv;
    }
    EmbeddedDigraph out;
    for (auto& v : g.vertices) out.add_vertex(vmap[v]);
    for (auto& [id, e] : g.edges) out.add_edge(emap[id], vmap[e.tail], vmap[e.head]);
    for (auto& [v, rot] : g.rotation) {
        auto& nr = out.rotation[vmap[v]];
        for (auto& s : rot) nr.push_back({emap[s.edge], s.out});
    }
    if (vmap_out) *vmap_out = vmap;
    return out;
}

}  // namespace detail

// Disjoint union.
inline AlternatingDimap c_union(const AlternatingDimap& s1, const AlternatingDimap& s2) {
    EmbeddedDigraph g = s1.graph();
    EmbeddedDigraph h = detail::rename_apart(s1, s2, nullptr);
    for (auto& v : h.vertices) g.add_vertex(v);
    for (auto& [id, e] : h.edges) g.add_edge(id, e.tail, e.head);
    for (auto& [v, rot] : h.rotation) g.rotation[v] = rot;
    return AlternatingDimap::validate(g);
}

// Identify v1 with v2, splicing s2's rotation into the anticlockwise-face gap
// after rotation position p1 at v1 (p1 must name an In slot, likewise p2).
inline AlternatingDimap c_union(const AlternatingDimap& s1, const std::string& v1, int p1,
                                const AlternatingDimap& s2, const std::string& v2, int p2) {
    if (!s1.vertices().count(v1) || !s2.vertices().count(v2))
        throw PreconditionError("c-union vertex not present");
    const auto& r1 = s1.graph().rotation.at(v1);
    const auto& r2raw = s2.graph().rotation.at(v2);
    if (p1 < 0 || p1 >= static_cast<int>(r1.size()) || p2 < 0 ||
        p2 >= static_cast<int>(r2raw.size()))
        throw PreconditionError("c-union corner out of range");
    if (r1[p1].out || r2raw[p2].out)
        throw PreconditionError("ClockwiseCorner: c-union corners must follow an In slot");

    std::map<std::string, std::string> vmap;
    EmbeddedDigraph h = detail::rename_apart(s1, s2, &vmap);
    EmbeddedDigraph g = s1.graph();
    for (auto& v : h.vertices)
        if (v != vmap[v2]) g.add_vertex(v);
    for (auto& [id, e] : h.edges) {
        EdgeEnds ends = e;
        if (ends.tail == vmap[v2]) ends.tail = v1;
        if (ends.head == vmap[v2]) ends.head = v1;
        g.add_edge(id, ends.tail, ends.head);
    }
    for (auto& [v, rot] : h.rotation)
        if (v != vmap[v2]) g.rotation[v] = rot;
    const auto& r2 = h.rotation.at(vmap[v2]);
    std::vector<HalfEdge> merged;
    for (int i = 0; i <= p1; i++) merged.push_back(r1[i]);
    for (size_t k = 1; k <= r2.size(); k++) merged.push_back(r2[(p2 + k) % r2.size()]);
    for (int i = p1 + 1; i < static_cast<int>(r1.size()); i++) merged.push_back(r1[i]);
    g.rotation[v1] = std::move(merged);
    AlternatingDimap out = AlternatingDimap::validate(g);

    // Sanity: each side hangs in an anticlockwise gap of the other.
    std::set<std::string> side2;
    for (auto& [id, e] : h.edges) side2.insert(id);
    std::set<std::string> side1;
    for (auto& [id, e] : s1.edges()) side1.insert(id);
    for (auto& [v, p] : corners_reaching(out, side1, side2))
        if (out.graph().rotation.at(v)[p].out)
            throw InternalCheckError("c-union left a side inside a clockwise face");
    for (auto& [v, p] : corners_reaching(out, side2, side1))
        if (out.graph().rotation.at(v)[p].out)
            throw InternalCheckError("c-union left a side inside a clockwise face");
    return out;
}

// ---- Tutte match ------------------------------------------------------------

namespace detail {

inline PlaneGraph delete_plane_edges(const PlaneGraph& g, const std::set<std::string>& drop) {
    PlaneGraph h;
    for (auto& [id, e] : g.edges)
        if (!drop.count(id)) {
            h.add_edge(id, e[0], e[1]);
            h.vertices.insert(e[0]);
            h.vertices.insert(e[1]);
        }
    for (auto& v : h.vertices) {
        auto& rot = h.rotation[v];
        for (auto& s : g.rotation.at(v))
            if (!drop.count(s.edge)) rot.push_back(s);
    }
    return h;
}

inline std::set<std::string> plane_bridges(const PlaneGraph& g) {
    MultiGraph mg = to_multigraph(g);
    std::vector<std::string> ids;
    for (auto& [id, e] : g.edges) ids.push_back(id);
    std::set<std::string> out;
    for (size_t i = 0; i < mg.edges.size(); i++)
        if (mg.edges[i].first != mg.edges[i].second && mg_is_bridge(mg, i))
            out.insert(ids[i]);
    return out;
}

}  // namespace detail

// Does the Tutte polynomial of the plane graph G equal the c-Tutte invariant
// of the c-alternating dimap D? Decided twice: once by comparing the
// polynomials, once by the structural characterisation (matching bridge and
// loop counts plus an alt_c-isomorphism on the pruned parts); a disagreement
// between the two routes is an internal error.
inline bool tutte_match(const PlaneGraph& g, const AlternatingDimap& d, int max_edges = 8) {
    AlternatingCertificate cert = recognize_alternating(d, true);
    if (!cert.ok)
        throw PreconditionError("NotCAlternating: " + cert.reason);
    bool by_poly = tutte_plane(g) == ctutte(d, max_edges);

    // Structural route.
    std::set<std::string> gloops, gbridges = detail::plane_bridges(g);
    for (auto& [id, e] : g.edges)
        if (e[0] == e[1]) gloops.insert(id);
    int p = static_cast<int>(gbridges.size());
    int q = static_cast<int>(gloops.size());
    int loops_needed = 0;
    std::set<std::string> dloops;
    for (auto& nest : cert.nests) {
        std::set<std::string> m(nest.loops.begin(), nest.loops.end());
        dloops.insert(m.begin(), m.end());
        auto ind = induced_subdimap(d, m);
        if (!ind) throw InternalCheckError("multiloop does not induce a subdimap");
        loops_needed += nest.size() - stats(*ind).cf;
    }
    std::set<std::string> gdrop = gloops;
    gdrop.insert(gbridges.begin(), gbridges.end());
    PlaneGraph gprime = detail::delete_plane_edges(g, gdrop);
    std::set<std::string> isolated;
    for (auto& v : gprime.vertices)
        if (gprime.rotation[v].empty()) isolated.insert(v);
    for (auto& v : isolated) {
        gprime.vertices.erase(v);
        gprime.rotation.erase(v);
    }

    // Cycle blocks: sizes >= 3 are necessarily c-cycle blocks; clockwise
    // digons may play either the c-cycle-block or the alt_c role.
    std::vector<Block> cycle_bs;
    for (auto& b : blocks(d))
        if (!b.is_loop() && is_cycle_block(d, b)) cycle_bs.push_back(b);
    std::vector<size_t> flexible;
    int fixed_bridges = 0;
    std::set<std::string> fixed_removed;
    for (size_t i = 0; i < cycle_bs.size(); i++) {
        if (cycle_bs[i].edges.size() == 2) {
            flexible.push_back(i);
        } else {
            fixed_bridges += static_cast<int>(cycle_bs[i].edges.size()) - 1;
            fixed_removed.insert(cycle_bs[i].edges.begin(), cycle_bs[i].edges.end());
        }
    }
    bool by_structure = false;
    if (q == loops_needed) {
        for (int mask = 0; mask < (1 << flexible.size()) && !by_structure; mask++) {
            int bridges = fixed_bridges;
            std::set<std::string> removed = fixed_removed;
            removed.insert(dloops.begin(), dloops.end());
            for (size_t bi = 0; bi < flexible.size(); bi++)
                if (mask & (1 << bi)) {
                    bridges += 1;
                    auto& b = cycle_bs[flexible[bi]];
                    removed.insert(b.edges.begin(), b.edges.end());
                }
            if (bridges != p) continue;
            std::set<std::string> keep;
            for (auto& [id, e] : d.edges())
                if (!removed.count(id)) keep.insert(id);
            AlternatingDimap dprime = empty_dimap();
            if (!keep.empty()) {
                auto ind = induced_subdimap(d, keep);
                if (!ind) continue;
                dprime = *ind;
            }
            try {
                if (is_isomorphic(alt_c(gprime), dprime)) by_structure = true;
            } catch (const ValidationError&) {
                // gprime with stray structure cannot be compared; not a match
            }
        }
    }
    if (by_poly != by_structure)
        throw InternalCheckError("Tutte match routes disagree");
    return by_poly;
}

}  // namespace adm
