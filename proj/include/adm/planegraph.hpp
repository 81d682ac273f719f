#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "adm/core.hpp"
#include "adm/errors.hpp"
#include "adm/poly.hpp"

namespace adm {

// One side of an undirected edge: (edge id, end 0 or 1).
struct PgSlot {
    std::string edge;
    int end = 0;
    bool operator==(const PgSlot& o) const { return edge == o.edge && end == o.end; }
};

// An (undirected) embedded multigraph; rotations anticlockwise from the
// positive side, same convention as for dimaps. ends[0]/ends[1] carry the two
// endpoints (equal for a loop).
struct PlaneGraph {
    std::set<std::string> vertices;
    std::map<std::string, std::array<std::string, 2>> edges;
    std::map<std::string, std::vector<PgSlot>> rotation;

    void add_vertex(const std::string& v) {
        vertices.insert(v);
        rotation.emplace(v, std::vector<PgSlot>{});
    }
    void add_edge(const std::string& id, const std::string& a, const std::string& b) {
        edges[id] = {a, b};
    }
};

inline void validate_plane_graph(const PlaneGraph& g) {
    std::map<std::string, std::array<int, 2>> count;
    for (auto& [v, rot] : g.rotation) {
        if (!g.vertices.count(v))
            throw ValidationError("rotation given for unknown vertex '" + v + "'");
        for (auto& s : rot) {
            auto it = g.edges.find(s.edge);
            if (it == g.edges.end() || s.end < 0 || s.end > 1)
                throw ValidationError("unknown slot '" + s.edge + "'");
            if (it->second[s.end] != v)
                throw ValidationError("slot of '" + s.edge + "' at wrong vertex '" + v + "'");
            count[s.edge][s.end]++;
        }
    }
    for (auto& [id, e] : g.edges)
        if (count[id][0] != 1 || count[id][1] != 1)
            throw ValidationError("edge '" + id + "' does not occupy exactly two slots");
}

// Component count, face count, total genus via dart tracing (rho . alpha).
inline EmbeddedStats plane_graph_stats(const PlaneGraph& g) {
    detail::UnionFind uf;
    for (auto& v : g.vertices) uf.find(v);
    for (auto& [id, e] : g.edges) uf.unite(e[0], e[1]);
    std::map<std::pair<std::string, int>, std::pair<std::string, int>> rho;
    for (auto& [v, rot] : g.rotation)
        for (size_t i = 0; i < rot.size(); i++)
            rho[{rot[i].edge, rot[i].end}] = {rot[(i + 1) % rot.size()].edge,
                                              rot[(i + 1) % rot.size()].end};
    std::map<std::string, std::array<int, 3>> comp;  // rep -> V, E, F
    for (auto& v : g.vertices) comp[uf.find(v)][0]++;
    for (auto& [id, e] : g.edges) comp[uf.find(e[0])][1]++;
    std::set<std::pair<std::string, int>> seen;
    for (auto& [d0, _] : rho) {
        if (seen.count(d0)) continue;
        auto d = d0;
        do {
            seen.insert(d);
            d = rho.at({d.first, 1 - d.second});
        } while (d != d0);
        comp[uf.find(g.edges.at(d0.first)[0])][2]++;
    }
    EmbeddedStats r;
    for (auto& [rep, c] : comp) {
        r.k++;
        int F = c[1] == 0 ? 1 : c[2];
        int twice_g = 2 - (c[0] - c[1] + F);
        if (twice_g < 0 || twice_g % 2 != 0)
            throw InternalCheckError("NonIntegerGenus in plane graph component " + rep);
        r.faces += F;
        r.total_genus += twice_g / 2;
    }
    return r;
}

// ---- Tutte polynomial via deletion / contraction ----------------------------

namespace detail {

struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

inline bool mg_is_bridge(const MultiGraph& g, size_t skip) {
    // does removing edge `skip` disconnect the component containing it?
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int s = 0; s < g.n; s++) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (size_t i = 0; i < g.edges.size(); i++) {
                if (i == skip) continue;
                auto [a, b] = g.edges[i];
                int other = a == v ? b : b == v ? a : -1;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = nc;
                    stack.push_back(other);
                }
            }
        }
        nc++;
    }
    return comp[g.edges[skip].first] != comp[g.edges[skip].second];
}

inline BiPoly tutte_multigraph(MultiGraph g) {
    // strip processed edges from the back for cheap copies
    if (g.edges.empty()) return BiPoly::one();
    auto [u, v] = g.edges.back();
    if (u == v) {  // loop
        g.edges.pop_back();
        return tutte_multigraph(std::move(g)) * BiPoly::var(1);
    }
    if (mg_is_bridge(g, g.edges.size() - 1)) {  // coloop
        g.edges.pop_back();
        for (auto& [a, b] : g.edges) {  // contract: v -> u
            if (a == v) a = u;
            if (b == v) b = u;
        }
        return tutte_multigraph(std::move(g)) * BiPoly::var(0);
    }
    MultiGraph del = g;
    del.edges.pop_back();
    BiPoly d = tutte_multigraph(std::move(del));
    g.edges.pop_back();
    for (auto& [a, b] : g.edges) {
        if (a == v) a = u;
        if (b == v) b = u;
    }
    return d + tutte_multigraph(std::move(g));
}

inline MultiGraph to_multigraph(const PlaneGraph& g) {
    MultiGraph mg;
    std::map<std::string, int> idx;
    for (auto& v : g.vertices) idx[v] = mg.n++;
    for (auto& [id, e] : g.edges) mg.edges.push_back({idx[e[0]], idx[e[1]]});
    return mg;
}

}  // namespace detail

// The classical Tutte polynomial of the underlying multigraph.
inline BiPoly tutte_plane(const PlaneGraph& g) {
    return detail::tutte_multigraph(detail::to_multigraph(g));
}

// ---- alt_c / alt_a ----------------------------------------------------------

// Replace every undirected edge by a pair of antiparallel directed edges
// (id "+": end0 -> end1, id "-": end1 -> end0). At each vertex an undirected
// slot expands into two adjacent slots; putting [Out leaving, In arriving]
// makes every such pair a clockwise face of size two (alt_c), putting
// [In arriving, Out leaving] an anticlockwise one (alt_a). Vertices without
// edges vanish (the empty dimap is alt of the edgeless graph).
inline AlternatingDimap alt_general(const PlaneGraph& g, bool clockwise) {
    validate_plane_graph(g);
    EmbeddedDigraph d;
    for (auto& [id, e] : g.edges) {
        d.add_edge(id + "+", e[0], e[1]);
        d.add_edge(id + "-", e[1], e[0]);
        d.vertices.insert(e[0]);
        d.vertices.insert(e[1]);
    }
    for (auto& v : d.vertices) {
        std::vector<HalfEdge> rot;
        for (auto& s : g.rotation.at(v)) {
            // the directed edge leaving v through this slot, and the one arriving
            std::string leaving = s.edge + (s.end == 0 ? "+" : "-");
            std::string arriving = s.edge + (s.end == 0 ? "-" : "+");
            if (clockwise) {
                rot.push_back({leaving, true});
                rot.push_back({arriving, false});
            } else {
                rot.push_back({arriving, false});
                rot.push_back({leaving, true});
            }
        }
        d.rotation[v] = std::move(rot);
    }
    return AlternatingDimap::validate(d);
}

inline AlternatingDimap alt_c(const PlaneGraph& g) { return alt_general(g, true); }
inline AlternatingDimap alt_a(const PlaneGraph& g) { return alt_general(g, false); }

// ---- named gallery ----------------------------------------------------------

inline PlaneGraph make_path(int n) {  // n vertices, n-1 edges
    PlaneGraph g;
    for (int i = 1; i <= n; i++) g.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n; i++) {
        std::string id = "e" + std::to_string(i);
        std::string a = "v" + std::to_string(i), b = "v" + std::to_string(i + 1);
        g.add_edge(id, a, b);
        g.rotation[a].push_back({id, 0});
        g.rotation[b].push_back({id, 1});
    }
    return g;
}

inline PlaneGraph make_cycle(int n) {  // n >= 2 vertices and edges
    PlaneGraph g;
    for (int i = 1; i <= n; i++) g.add_vertex("v" + std::to_string(i));
    for (int i = 1; i <= n; i++) {
        std::string id = "e" + std::to_string(i);
        std::string a = "v" + std::to_string(i);
        std::string b = "v" + std::to_string(i % n + 1);
        g.add_edge(id, a, b);
        g.rotation[a].push_back({id, 0});
        g.rotation[b].push_back({id, 1});
    }
    return g;
}

inline PlaneGraph make_theta() {  // two vertices, three parallel edges
    PlaneGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    for (int i = 1; i <= 3; i++) {
        std::string id = "e" + std::to_string(i);
        g.add_edge(id, "u", "v");
        g.rotation["u"].push_back({id, 0});
    }
    for (int i = 3; i >= 1; i--) g.rotation["v"].push_back({"e" + std::to_string(i), 1});
    return g;
}

inline PlaneGraph make_bouquet(int k) {  // one vertex, k nested loops
    PlaneGraph g;
    g.add_vertex("v");
    for (int i = 1; i <= k; i++) {
        std::string id = "e" + std::to_string(i);
        g.add_edge(id, "v", "v");
        g.rotation["v"].push_back({id, 0});
        g.rotation["v"].push_back({id, 1});
    }
    return g;
}

inline PlaneGraph make_k4() {
    PlaneGraph g;
    for (auto v : {"v1", "v2", "v3", "v4"}) g.add_vertex(v);
    auto E = [&](const char* id, const char* a, const char* b) { g.add_edge(id, a, b); };
    E("a", "v1", "v2");
    E("b", "v1", "v3");
    E("c", "v1", "v4");
    E("d", "v2", "v3");
    E("e", "v2", "v4");
    E("f", "v3", "v4");
    // planar embedding: triangle v1 v2 v3 with v4 inside
    g.rotation["v1"] = {{"a", 0}, {"c", 0}, {"b", 0}};
    g.rotation["v2"] = {{"d", 0}, {"e", 0}, {"a", 1}};
    g.rotation["v3"] = {{"b", 1}, {"f", 0}, {"d", 1}};
    g.rotation["v4"] = {{"f", 1}, {"c", 1}, {"e", 1}};
    return g;
}

// ---- enumeration of connected plane multigraphs -----------------------------

namespace detail {

// canonical trace of a dart permutation pair (rho, alpha) with alpha fixed as
// (0 1)(2 3)...: breadth-first relabeling from every start dart, least trace.
inline std::string dart_canonical(const std::vector<int>& rho) {
    int n = static_cast<int>(rho.size());
    std::string best;
    for (int start = 0; start < n; start++) {
        std::vector<int> label(n, -1), order;
        label[start] = 0;
        order.push_back(start);
        for (size_t q = 0; q < order.size(); q++) {
            int d = order[q];
            for (int nb : {rho[d], d ^ 1}) {
                if (label[nb] < 0) {
                    label[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        std::string trace;
        for (int d : order) {
            trace += std::to_string(label[rho[d]]);
            trace += ',';
            trace += std::to_string(label[d ^ 1]);
            trace += ';';
        }
        if (best.empty() || trace < best) best = std::move(trace);
    }
    return best;
}

inline PlaneGraph plane_graph_from_rho(const std::vector<int>& rho) {
    int n = static_cast<int>(rho.size());
    std::vector<int> vertex_of(n, -1);
    int nv = 0;
    std::vector<std::vector<int>> cycles;
    for (int d = 0; d < n; d++) {
        if (vertex_of[d] >= 0) continue;
        std::vector<int> cyc;
        for (int j = d; vertex_of[j] < 0; j = rho[j]) {
            vertex_of[j] = nv;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
        nv++;
    }
    PlaneGraph g;
    auto vn = [](int i) { return "v" + std::to_string(i + 1); };
    auto en = [](int i) { return "e" + std::to_string(i + 1); };
    for (int i = 0; i < nv; i++) g.add_vertex(vn(i));
    for (int e = 0; e * 2 < n; e++)
        g.add_edge(en(e), vn(vertex_of[2 * e]), vn(vertex_of[2 * e + 1]));
    for (int i = 0; i < nv; i++)
        for (int d : cycles[i]) g.rotation[vn(i)].push_back({en(d / 2), d % 2});
    return g;
}

}  // namespace detail

// All connected plane (genus-zero) multigraphs with m edges, up to
// orientation-preserving embedding isomorphism. m = 0 gives the single
// vertex.
inline std::vector<PlaneGraph> enumerate_plane_graphs(int m, int max_edges = 4) {
    if (m < 0 || m > max_edges)
        throw PreconditionError("SizeBoundExceeded: m=" + std::to_string(m));
    std::vector<PlaneGraph> out;
    if (m == 0) {
        PlaneGraph g;
        g.add_vertex("v1");
        out.push_back(g);
        return out;
    }
    int n = 2 * m;
    std::vector<int> rho(n);
    std::iota(rho.begin(), rho.end(), 0);
    std::set<std::string> seen;
    do {
        // connectivity over <rho, alpha>
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            cnt++;
            for (int nb : {rho[d], d ^ 1})
                if (!vis[nb]) {
                    vis[nb] = 1;
                    stack.push_back(nb);
                }
        }
        if (cnt != n) continue;
        std::string key = detail::dart_canonical(rho);
        if (!seen.insert(key).second) continue;
        PlaneGraph g = detail::plane_graph_from_rho(rho);
        EmbeddedStats st = plane_graph_stats(g);
        if (st.total_genus != 0) continue;
        out.push_back(std::move(g));
    } while (std::next_permutation(rho.begin(), rho.end()));
    return out;
}

}  // namespace adm
