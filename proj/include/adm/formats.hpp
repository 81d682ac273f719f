#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adm/census.hpp"
#include "adm/core.hpp"
#include "adm/errors.hpp"
#include "adm/params.hpp"
#include "adm/planegraph.hpp"
#include "adm/rational.hpp"

namespace adm {

using Json = nlohmann::json;

namespace detail {

inline int line_of_offset(const std::string& text, size_t offset) {
    int line = 1;
    for (size_t i = 0; i < offset && i < text.size(); i++)
        if (text[i] == '\n') line++;
    return line;
}

inline Json parse_json_text(const std::string& text, int base_line = 0) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& ex) {
        int ln = line_of_offset(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw FormatError(ex.what(), base_line > 0 ? base_line : ln);
    }
}

inline void require_format(const Json& j, const std::string& name, int line = 0) {
    if (!j.is_object()) throw FormatError("expected a JSON object", line);
    if (!j.contains("format") || !j.at("format").is_string() ||
        j.at("format").get<std::string>() != name)
        throw FormatError("missing or wrong \"format\" field, expected \"" + name + "\"",
                          line);
}

inline const Json& field(const Json& j, const char* key, int line = 0) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"", line);
    return j.at(key);
}

inline std::string str_field(const Json& j, const char* key, int line = 0) {
    const Json& v = field(j, key, line);
    if (!v.is_string())
        throw FormatError(std::string("field \"") + key + "\" must be a string", line);
    return v.get<std::string>();
}

// Rotate a cyclic word so that its least element comes first.
template <class T, class Render>
std::vector<T> least_rotation(const std::vector<T>& w, Render&& render) {
    if (w.empty()) return w;
    size_t best = 0;
    for (size_t i = 1; i < w.size(); i++)
        if (render(w[i]) < render(w[best])) best = i;
    std::vector<T> out;
    for (size_t k = 0; k < w.size(); k++) out.push_back(w[(best + k) % w.size()]);
    return out;
}

}  // namespace detail

// ---- adm-v1: alternating dimaps ---------------------------------------------
//
// {"format":"adm-v1",
//  "vertices":[{"id":"v","rot":["+e","-e"]}],   rot anticlockwise, +out / -in
//  "edges":[{"id":"e","tail":"v","head":"v"}]}
//
// Canonical form: vertices and edges sorted by id, each rotation started at
// its least half-edge token.

inline Json adm_to_json(const AlternatingDimap& d) {
    Json verts = Json::array();
    for (auto& v : d.vertices()) {
        auto rot = detail::least_rotation(d.graph().rotation.at(v),
                                          [](const HalfEdge& h) { return h.str(); });
        Json tokens = Json::array();
        for (auto& h : rot) tokens.push_back(h.str());
        verts.push_back(Json{{"id", v}, {"rot", tokens}});
    }
    Json edges = Json::array();
    for (auto& [id, e] : d.edges())
        edges.push_back(Json{{"id", id}, {"tail", e.tail}, {"head", e.head}});
    return Json{{"format", "adm-v1"}, {"vertices", verts}, {"edges", edges}};
}

inline AlternatingDimap adm_from_json(const Json& j, int line = 0) {
    detail::require_format(j, "adm-v1", line);
    EmbeddedDigraph g;
    for (auto& ej : detail::field(j, "edges", line)) {
        std::string id = detail::str_field(ej, "id", line);
        if (g.edges.count(id)) throw FormatError("duplicate edge id '" + id + "'", line);
        g.add_edge(id, detail::str_field(ej, "tail", line),
                   detail::str_field(ej, "head", line));
    }
    for (auto& vj : detail::field(j, "vertices", line)) {
        std::string id = detail::str_field(vj, "id", line);
        if (g.vertices.count(id)) throw FormatError("duplicate vertex id '" + id + "'", line);
        g.add_vertex(id);
        for (auto& tok : detail::field(vj, "rot", line)) {
            if (!tok.is_string()) throw FormatError("rotation tokens must be strings", line);
            std::string t = tok.get<std::string>();
            if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
                throw FormatError("bad half-edge token '" + t + "'", line);
            g.rotation[id].push_back({t.substr(1), t[0] == '+'});
        }
    }
    return AlternatingDimap::validate(g);
}

inline std::string emit_adm(const AlternatingDimap& d) { return adm_to_json(d).dump(2) + "\n"; }

inline AlternatingDimap parse_adm(const std::string& text) {
    return adm_from_json(detail::parse_json_text(text));
}

// ---- pg-v1: embedded plane graphs -------------------------------------------
//
// {"format":"pg-v1",
//  "vertices":[{"id":"u","rot":["e/0","e/1"]}],   slot = edge id + end 0|1
//  "edges":[{"id":"e","ends":["u","v"]}]}

inline Json pg_to_json(const PlaneGraph& g) {
    auto render = [](const PgSlot& s) { return s.edge + "/" + std::to_string(s.end); };
    Json verts = Json::array();
    for (auto& v : g.vertices) {
        auto rot = detail::least_rotation(g.rotation.at(v), render);
        Json tokens = Json::array();
        for (auto& s : rot) tokens.push_back(render(s));
        verts.push_back(Json{{"id", v}, {"rot", tokens}});
    }
    Json edges = Json::array();
    for (auto& [id, e] : g.edges)
        edges.push_back(Json{{"id", id}, {"ends", Json::array({e[0], e[1]})}});
    return Json{{"format", "pg-v1"}, {"vertices", verts}, {"edges", edges}};
}

inline PlaneGraph pg_from_json(const Json& j, int line = 0) {
    detail::require_format(j, "pg-v1", line);
    PlaneGraph g;
    for (auto& ej : detail::field(j, "edges", line)) {
        std::string id = detail::str_field(ej, "id", line);
        if (g.edges.count(id)) throw FormatError("duplicate edge id '" + id + "'", line);
        const Json& ends = detail::field(ej, "ends", line);
        if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
            !ends[1].is_string())
            throw FormatError("edge \"ends\" must be two vertex ids", line);
        g.add_edge(id, ends[0].get<std::string>(), ends[1].get<std::string>());
    }
    for (auto& vj : detail::field(j, "vertices", line)) {
        std::string id = detail::str_field(vj, "id", line);
        if (g.vertices.count(id)) throw FormatError("duplicate vertex id '" + id + "'", line);
        g.add_vertex(id);
        for (auto& tok : detail::field(vj, "rot", line)) {
            if (!tok.is_string()) throw FormatError("rotation tokens must be strings", line);
            std::string t = tok.get<std::string>();
            auto slash = t.rfind('/');
            if (slash == std::string::npos || slash + 2 != t.size() ||
                (t[slash + 1] != '0' && t[slash + 1] != '1'))
                throw FormatError("bad slot token '" + t + "'", line);
            g.rotation[id].push_back({t.substr(0, slash), t[slash + 1] - '0'});
        }
    }
    validate_plane_graph(g);
    return g;
}

inline std::string emit_pg(const PlaneGraph& g) { return pg_to_json(g).dump(2) + "\n"; }

inline PlaneGraph parse_pg(const std::string& text) {
    return pg_from_json(detail::parse_json_text(text));
}

// ---- trin-v1 / corpus-v1: permutation triples -------------------------------
//
// trin-v1:  {"format":"trin-v1","m":3,"sigma1":[["e1","e2","e3"]],"sigmaw":[["e1"],...]}
// corpus-v1 (JSONL): one {"m":...,"sigma1":...,"sigmaw":...} object per line.
// Cycles cover every label including fixed points; canonically each cycle
// starts at its least label and cycles are sorted by first label.

namespace detail {

inline Json perm_to_cycles(const std::vector<std::string>& labels,
                           const std::vector<int>& perm) {
    int m = static_cast<int>(labels.size());
    std::map<std::string, int> index;
    for (int i = 0; i < m; i++) index[labels[i]] = i;
    std::vector<std::string> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    Json cycles = Json::array();
    std::vector<char> seen(m, 0);
    for (auto& start : sorted_labels) {
        int i = index.at(start);
        if (seen[i]) continue;
        Json cyc = Json::array();
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(labels[j]);
            j = perm[j];
        } while (j != i);
        cycles.push_back(cyc);
    }
    return cycles;
}

inline std::vector<int> cycles_to_perm(const Json& cycles,
                                       const std::vector<std::string>& labels, int line) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); i++) index[labels[i]] = static_cast<int>(i);
    std::vector<int> perm(labels.size(), -1);
    if (!cycles.is_array()) throw FormatError("cycles must be an array of arrays", line);
    for (auto& cyc : cycles) {
        if (!cyc.is_array() || cyc.empty())
            throw FormatError("each cycle must be a non-empty array", line);
        for (size_t k = 0; k < cyc.size(); k++) {
            if (!cyc[k].is_string()) throw FormatError("cycle entries must be labels", line);
            std::string from = cyc[k].get<std::string>();
            std::string to = cyc[(k + 1) % cyc.size()].get<std::string>();
            auto fi = index.find(from), ti = index.find(to);
            if (fi == index.end() || ti == index.end())
                throw FormatError("unknown label '" + (fi == index.end() ? from : to) + "'",
                                  line);
            if (perm[fi->second] != -1)
                throw FormatError("label '" + from + "' appears twice", line);
            perm[fi->second] = ti->second;
        }
    }
    for (size_t i = 0; i < perm.size(); i++)
        if (perm[i] == -1)
            throw FormatError("label '" + labels[i] + "' missing from the cycles", line);
    return perm;
}

inline Json triple_body(const PermutationTriple& t) {
    return Json{{"m", t.size()},
                {"sigma1", perm_to_cycles(t.labels, t.s1)},
                {"sigmaw", perm_to_cycles(t.labels, t.sw)}};
}

inline PermutationTriple triple_from_body(const Json& j, int line) {
    const Json& mj = field(j, "m", line);
    if (!mj.is_number_integer() || mj.get<int>() < 0)
        throw FormatError("\"m\" must be a non-negative integer", line);
    int m = mj.get<int>();
    std::vector<std::string> labels;
    for (int i = 1; i <= m; i++) labels.push_back("e" + std::to_string(i));
    auto s1 = cycles_to_perm(field(j, "sigma1", line), labels, line);
    auto sw = cycles_to_perm(field(j, "sigmaw", line), labels, line);
    return triple_from_generators(labels, s1, sw);
}

}  // namespace detail

inline Json trin_to_json(const PermutationTriple& t) {
    Json j = detail::triple_body(t);
    j["format"] = "trin-v1";
    return j;
}

inline PermutationTriple trin_from_json(const Json& j, int line = 0) {
    detail::require_format(j, "trin-v1", line);
    return detail::triple_from_body(j, line);
}

inline std::string emit_trin(const PermutationTriple& t) { return trin_to_json(t).dump(2) + "\n"; }

inline PermutationTriple parse_trin(const std::string& text) {
    return trin_from_json(detail::parse_json_text(text));
}

inline std::string emit_corpus(const Corpus& c) {
    std::string out;
    for (auto& t : c.classes) out += detail::triple_body(t).dump() + "\n";
    return out;
}

inline Corpus parse_corpus(const std::string& text) {
    Corpus c;
    std::istringstream in(text);
    std::string line_text;
    int line = 0;
    while (std::getline(in, line_text)) {
        line++;
        if (line_text.empty()) continue;
        Json j = detail::parse_json_text(line_text, line);
        PermutationTriple t = detail::triple_from_body(j, line);
        try {
            check_triple(t);
        } catch (const ValidationError& ex) {
            throw FormatError(ex.what(), line);
        }
        if (c.classes.empty())
            c.m = t.size();
        else if (t.size() != c.m)
            throw FormatError("mixed sizes in one corpus", line);
        c.classes.push_back(t);
    }
    return c;
}

// ---- params-v1: the sixteen recursion parameters ----------------------------
//
// {"format":"params-v1","w":1,"x":"3/4","y":"y",...}: each of the sixteen keys
// maps to an integer, a rational string "p/q", or the parameter's own name to
// leave it a free symbol.

inline Json params_to_json(const ParamSeq16& p) {
    Json j{{"format", "params-v1"}};
    for (int i = 0; i < 16; i++) {
        const std::string& name = Vars16::names()[i];
        if (!p.entry(i))
            j[name] = name;
        else if (p.entry(i)->is_integer())
            j[name] = std::stoll(p.entry(i)->num().str());
        else
            j[name] = p.entry(i)->str();
    }
    return j;
}

inline ParamSeq16 params_from_json(const Json& j, int line = 0) {
    detail::require_format(j, "params-v1", line);
    ParamSeq16 p = ParamSeq16::symbolic();
    for (int i = 0; i < 16; i++) {
        const std::string& name = Vars16::names()[i];
        const Json& v = detail::field(j, name.c_str(), line);
        if (v.is_number_integer()) {
            p.set(i, Rational(v.get<long long>()));
        } else if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (s == name) continue;  // stays a free symbol
            if (s.find_first_not_of("-0123456789/") != std::string::npos)
                throw FormatError("parameter \"" + name + "\" must be a number, \"p/q\", or its own name",
                                  line);
            p.set(i, Rational::parse(s));
        } else {
            throw FormatError("parameter \"" + name + "\" must be a number or string", line);
        }
    }
    return p;
}

inline std::string emit_params(const ParamSeq16& p) { return params_to_json(p).dump(2) + "\n"; }

inline ParamSeq16 parse_params(const std::string& text) {
    return params_from_json(detail::parse_json_text(text));
}

// ---- file IO ----------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failure on '" + path + "'");
}

inline AlternatingDimap load_adm(const std::string& path) {
    return parse_adm(read_text_file(path));
}
inline void save_adm(const AlternatingDimap& d, const std::string& path) {
    write_text_file(path, emit_adm(d));
}
inline PlaneGraph load_pg(const std::string& path) { return parse_pg(read_text_file(path)); }
inline void save_pg(const PlaneGraph& g, const std::string& path) {
    write_text_file(path, emit_pg(g));
}
inline Corpus load_corpus(const std::string& path) {
    return parse_corpus(read_text_file(path));
}
inline void save_corpus(const Corpus& c, const std::string& path) {
    write_text_file(path, emit_corpus(c));
}
inline ParamSeq16 load_params(const std::string& path) {
    return parse_params(read_text_file(path));
}

}  // namespace adm
