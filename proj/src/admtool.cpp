// admtool: command-line front end for the alternating-dimap library.
//
// Exit codes: 0 success; 1 input/validation error; 2 invariant not well
// defined; 3 precondition/regime violation; 4 internal self-check failure.

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adm/census.hpp"
#include "adm/core.hpp"
#include "adm/formats.hpp"
#include "adm/invariants.hpp"
#include "adm/minors.hpp"
#include "adm/planegraph.hpp"
#include "adm/reduce.hpp"
#include "adm/structure.hpp"
#include "adm/triality.hpp"

using namespace adm;

namespace {

bool g_json = false;

void emit_report(const Json& j, const std::string& plain) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

ReductionKind parse_op(const std::string& op) {
    if (op == "1") return ReductionKind::One;
    if (op == "w") return ReductionKind::Omega;
    if (op == "w2") return ReductionKind::Omega2;
    if (op == "star") return ReductionKind::Star;
    throw PreconditionError("unknown reduction op '" + op + "', expected 1|w|w2|star");
}

EdgeOrdering parse_order(const std::string& csv) {
    EdgeOrdering order;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) order.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) order.push_back(cur);
    return order;
}

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
    std::string out;
    for (auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

// ---- subcommands ------------------------------------------------------------

int cmd_validate(const std::string& file) {
    AlternatingDimap d = load_adm(file);
    Json j{{"ok", true}, {"edges", d.edge_count()},
           {"vertices", static_cast<int>(d.vertices().size())}};
    emit_report(j, "ok: " + std::to_string(d.edge_count()) + " edges, " +
                       std::to_string(d.vertices().size()) + " vertices\n");
    return 0;
}

int cmd_stats(const std::string& file) {
    AlternatingDimap d = load_adm(file);
    DimapStats st = stats(d);
    Json genus = Json::object();
    for (auto& [rep, g] : st.genus) genus[rep] = g;
    Json j{{"components", st.k},     {"in_stars", st.is},
           {"a_faces", st.af},       {"c_faces", st.cf},
           {"edges", st.edge_count}, {"total_genus", st.total_genus()},
           {"genus", genus}};
    std::string plain = "components " + std::to_string(st.k) + "\nin-stars " +
                        std::to_string(st.is) + "\na-faces " + std::to_string(st.af) +
                        "\nc-faces " + std::to_string(st.cf) + "\nedges " +
                        std::to_string(st.edge_count) + "\ntotal-genus " +
                        std::to_string(st.total_genus()) + "\n";
    emit_report(j, plain);
    return 0;
}

int cmd_classify(const std::string& file) {
    AlternatingDimap d = load_adm(file);
    Json j = Json::object();
    std::string plain;
    for (auto& e : d.edge_ids()) {
        EdgeClass c = classify_edge(d, e, true);
        j[e] = edge_class_name(c.kind);
        plain += e + ": " + edge_class_name(c.kind) + "\n";
    }
    emit_report(j, plain);
    return 0;
}

int cmd_faces(const std::string& file) {
    AlternatingDimap d = load_adm(file);
    Json j = Json::array();
    std::string plain;
    auto [cw, acw] = faces(d);
    auto emit = [&](const std::vector<Face>& fs, const char* kind) {
        for (auto& f : fs) {
            j.push_back(Json{{"kind", kind}, {"boundary", f.boundary}});
            plain += std::string(kind) + ": " + join(f.boundary) + "\n";
        }
    };
    emit(cw, "clockwise");
    emit(acw, "anticlockwise");
    emit_report(j, plain);
    return 0;
}

int cmd_reduce(const std::string& file, const std::string& edge, const std::string& op,
               const std::string& out) {
    AlternatingDimap d = reduce(load_adm(file), edge, parse_op(op));
    if (out.empty())
        std::cout << emit_adm(d);
    else
        save_adm(d, out);
    return 0;
}

int cmd_trial(const std::string& file, bool square) {
    AlternatingDimap d = load_adm(file);
    std::cout << emit_adm(square ? trial2(d) : trial(d));
    return 0;
}

int cmd_eti(const std::string& file, const std::string& order_csv, bool all_orders,
            const std::string& params_file, bool distinct) {
    AlternatingDimap d = load_adm(file);
    ParamSeq16 p = params_file.empty() ? ParamSeq16::symbolic() : load_params(params_file);
    if (all_orders) {
        DerivedSet<MultiPoly16> s = eti_all_orderings(d, p);
        std::vector<std::pair<std::string, std::string>> rows;  // (value, witness)
        for (size_t i = 0; i < s.values.size(); i++)
            rows.push_back({s.values[i].render(), join(s.witnesses[i])});
        std::sort(rows.begin(), rows.end());
        Json j = Json::array();
        std::string plain;
        for (auto& [v, w] : rows) {
            if (distinct) {
                j.push_back(v);
                plain += v + "\n";
            } else {
                j.push_back(Json{{"value", v}, {"order", w}});
                plain += v + "  [" + w + "]\n";
            }
        }
        emit_report(j, plain);
        return 0;
    }
    EdgeOrdering order = order_csv.empty() ? default_ordering(d) : parse_order(order_csv);
    MultiPoly16 v = eti_derived(d, order, p);
    emit_report(Json{{"value", v.render()}}, v.render() + "\n");
    return 0;
}

int cmd_bitutte(const std::string& file, bool all_orders, const std::string& zeta,
                bool cside) {
    AlternatingDimap d = load_adm(file);
    if (!zeta.empty()) {
        if (zeta != "plus" && zeta != "minus")
            throw PreconditionError("--zeta takes plus or minus");
        Cyclotomic6 v = cside ? ctutte_zeta(d, zeta == "plus") : atutte_zeta(d, zeta == "plus");
        emit_report(Json{{"value", v.str()}}, v.str() + "\n");
        return 0;
    }
    if (all_orders) {
        DerivedSet<BiPoly> s = cside ? ctutte_all_orderings(d) : atutte_all_orderings(d);
        std::vector<std::string> vals;
        for (auto& v : s.values) vals.push_back(v.render());
        std::sort(vals.begin(), vals.end());
        Json j = Json::array();
        std::string plain;
        for (auto& v : vals) {
            j.push_back(v);
            plain += v + "\n";
        }
        emit_report(j, plain);
        return vals.size() > 1 ? 2 : 0;
    }
    BiPoly v = cside ? ctutte(d) : atutte(d);
    emit_report(Json{{"value", v.render()}}, v.render() + "\n");
    return 0;
}

int cmd_tutte(const std::string& file) {
    BiPoly v = tutte_plane(load_pg(file));
    emit_report(Json{{"value", v.render()}}, v.render() + "\n");
    return 0;
}

int cmd_alt(const std::string& file, bool cside) {
    PlaneGraph g = load_pg(file);
    std::cout << emit_adm(cside ? alt_c(g) : alt_a(g));
    return 0;
}

int cmd_recognize(const std::string& file) {
    AlternatingDimap d = load_adm(file);
    AlternatingCertificate c = recognize_alternating(d, true);
    AlternatingCertificate a = recognize_alternating(d, false);
    Json j{{"c_simple", is_c_simple(d)},
           {"a_simple", is_a_simple(d)},
           {"c_alternating", c.ok},
           {"a_alternating", a.ok},
           {"alt_c_image", is_alt_c_image(d).has_value()},
           {"alt_a_image", is_alt_a_image(d).has_value()}};
    if (!c.ok) j["c_reason"] = c.reason;
    if (!a.ok) j["a_reason"] = a.reason;
    std::string plain;
    auto line = [&](const char* k, bool v) {
        plain += std::string(k) + ": " + (v ? "yes" : "no") + "\n";
    };
    line("c-simple", is_c_simple(d));
    line("a-simple", is_a_simple(d));
    line("c-alternating", c.ok);
    if (!c.ok) plain += "  reason: " + c.reason + "\n";
    line("a-alternating", a.ok);
    if (!a.ok) plain += "  reason: " + a.reason + "\n";
    line("alt_c-image", is_alt_c_image(d).has_value());
    line("alt_a-image", is_alt_a_image(d).has_value());
    emit_report(j, plain);
    return 0;
}

int cmd_minor(const std::string& file, const std::string& target) {
    AlternatingDimap d = load_adm(file);
    auto& lib = excluded_library();
    AlternatingDimap h = [&] {
        if (target == "g13") return lib.g13;
        if (target == "g23a") return lib.g23a;
        if (target == "g23c") return lib.g23c;
        if (target == "g351") return lib.g351;
        if (target == "g24") return lib.g24;
        return load_adm(target);
    }();
    auto trace = has_minor(d, h);
    Json steps = Json::array();
    std::string plain;
    if (trace) {
        for (auto& s : *trace)
            steps.push_back(Json::array({s.edge, reduction_name(s.kind)}));
        plain = "minor found";
        for (auto& s : *trace)
            plain += " [" + std::string(reduction_name(s.kind)) + "]" + s.edge;
        plain += "\n";
    } else {
        plain = "no such minor\n";
    }
    emit_report(Json{{"found", trace.has_value()}, {"trace", steps}}, plain);
    return 0;
}

int cmd_enumerate(int m, bool connected, const std::string& out) {
    Corpus c = enumerate_dimaps(m, connected);
    if (!out.empty()) save_corpus(c, out);
    emit_report(Json{{"m", m}, {"classes", static_cast<int>(c.classes.size())}},
                std::to_string(c.classes.size()) + " classes\n");
    return 0;
}

// ---- verify suites ----------------------------------------------------------

struct SuiteResult {
    int passed = 0, failed = 0;
};

SuiteResult suite_eti(int max_m) {
    SuiteResult r;
    for (auto& d : corpus_dimaps(max_m)) {
        bool all_triloops = true;
        for (auto& e : d.edge_ids())
            all_triloops = all_triloops && classify_edge(d, e, true).is_triloop();
        WellDefinedReport rep = eti_well_defined(d, ParamSeq16::symbolic());
        (rep.well_defined == all_triloops ? r.passed : r.failed)++;
    }
    return r;
}

SuiteResult suite_triality(int max_m) {
    SuiteResult r;
    for (auto& d : corpus_dimaps(max_m)) {
        DimapStats st = stats(d), st1 = stats(trial(d));
        bool ok = is_isomorphic(trial(trial2(d)), d) && st1.is == st.cf &&
                  st1.af == st.is && st1.cf == st.af;
        for (auto& e : d.edge_ids()) {
            // flag-level comparison avoids the multi-semiloop precedence collapse
            EdgeClass c0 = classify_edge(d, e, true);
            EdgeClass c1 = classify_edge(trial(d), e, true);
            ok = ok && c1.isOmegaLoop == c0.is1Loop && c1.isOmega2Loop == c0.isOmegaLoop &&
                 c1.is1Loop == c0.isOmega2Loop && c1.isOmegaSemiloop == c0.is1Semiloop &&
                 c1.isOmega2Semiloop == c0.isOmegaSemiloop &&
                 c1.is1Semiloop == c0.isOmega2Semiloop;
        }
        (ok ? r.passed : r.failed)++;
    }
    return r;
}

SuiteResult suite_ctutte(int max_m) {
    SuiteResult r;
    for (auto& d : corpus_dimaps(max_m)) {
        if (stats(d).total_genus() != 0) continue;
        bool ok = (ctutte_all_orderings(d).values.size() == 1) == is_c_alternating(d) &&
                  (atutte_all_orderings(d).values.size() == 1) == is_a_alternating(d);
        (ok ? r.passed : r.failed)++;
    }
    return r;
}

SuiteResult suite_minors(int max_m, unsigned seed) {
    SuiteResult r;
    auto& lib = excluded_library();
    std::vector<AlternatingDimap> pool;
    for (auto& d : corpus_dimaps(max_m)) {
        if (stats(d).total_genus() != 0) continue;
        pool.push_back(d);
        bool non_triloop = false;
        for (auto& e : d.edge_ids())
            non_triloop = non_triloop || !classify_edge(d, e, true).is_triloop();
        if (!non_triloop) {
            r.passed++;
            continue;
        }
        bool hit = has_minor(d, lib.g13).has_value() || has_minor(d, lib.g23a).has_value() ||
                   has_minor(d, lib.g23c).has_value();
        (hit ? r.passed : r.failed)++;
    }
    // seeded random subdimap pairs
    std::mt19937 rng(seed);
    int done = 0;
    while (done < 25 && !pool.empty()) {
        AlternatingDimap& d = pool[rng() % pool.size()];
        std::vector<std::string> ids = d.edge_ids();
        std::set<std::string> keep;
        for (auto& id : ids)
            if (rng() % 2) keep.insert(id);
        if (keep.empty() || static_cast<int>(keep.size()) == d.edge_count()) continue;
        auto h = induced_subdimap(d, keep);
        if (!h || !is_subdimap(*h, d)) continue;
        done++;
        try {
            auto [y, z] = reduce_to_subdimap(d, *h);
            AlternatingDimap back = apply_reduction_sets(d, y, z);
            bool ok = back.vertices() == h->vertices() &&
                      back.edge_count() == h->edge_count() && is_subdimap(back, *h);
            (ok ? r.passed : r.failed)++;
        } catch (const InternalCheckError&) {
            r.failed++;
        }
    }
    return r;
}

int cmd_verify(const std::string& suite, int max_m, unsigned seed) {
    std::vector<std::pair<std::string, SuiteResult>> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("eti")) results.push_back({"eti", suite_eti(max_m)});
    if (want("triality")) results.push_back({"triality", suite_triality(max_m)});
    if (want("ctutte")) results.push_back({"ctutte", suite_ctutte(max_m)});
    if (want("minors")) results.push_back({"minors", suite_minors(max_m, seed)});
    if (results.empty())
        throw PreconditionError("unknown suite '" + suite +
                                "', expected eti|triality|ctutte|minors|all");
    Json j = Json::object();
    std::string plain;
    int failed = 0;
    for (auto& [name, res] : results) {
        j[name] = Json{{"passed", res.passed}, {"failed", res.failed}};
        plain += name + ": " + std::to_string(res.passed) + " passed, " +
                 std::to_string(res.failed) + " failed\n";
        failed += res.failed;
    }
    emit_report(j, plain);
    return failed == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating dimap toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable JSON reports");

    std::string file, edge, op, out, order_csv, params_file, zeta, target, suite = "all";
    bool square = false, all_orders = false, distinct = false, connected = false;
    int m = 0, max_m = 4;
    unsigned seed = 12345;

    auto with_file = [&](CLI::App* c) {
        c->add_option("file", file, "input document")->required();
        return c;
    };
    with_file(app.add_subcommand("validate", "parse and validate a dimap file"));
    with_file(app.add_subcommand("stats", "report component/in-star/face counts"));
    with_file(app.add_subcommand("classify", "classify every edge"));
    with_file(app.add_subcommand("faces", "list faces with their boundaries"));

    auto* sc_reduce = with_file(app.add_subcommand("reduce", "apply one reduction"));
    sc_reduce->add_option("--edge", edge, "edge id")->required();
    sc_reduce->add_option("--op", op, "1|w|w2|star")->required();
    sc_reduce->add_option("--out", out, "write result here instead of stdout");

    auto* sc_trial = with_file(app.add_subcommand("trial", "apply the triality transform"));
    sc_trial->add_flag("--square", square, "apply it twice");

    auto* sc_eti = with_file(app.add_subcommand("eti", "extended Tutte invariant recursion"));
    sc_eti->add_option("--order", order_csv, "comma-separated edge ordering");
    sc_eti->add_flag("--all-orders", all_orders, "evaluate every ordering");
    sc_eti->add_option("--params", params_file, "parameter file");
    sc_eti->add_flag("--distinct", distinct, "print distinct values only");

    auto* sc_ct = with_file(app.add_subcommand("ctutte", "c-Tutte invariant"));
    sc_ct->add_flag("--all-orders", all_orders, "list every derived value");
    sc_ct->add_option("--zeta", zeta, "evaluate at a sixth root of unity: plus|minus");
    auto* sc_at = with_file(app.add_subcommand("atutte", "a-Tutte invariant"));
    sc_at->add_flag("--all-orders", all_orders, "list every derived value");

    with_file(app.add_subcommand("tutte", "Tutte polynomial of a plane graph"));
    with_file(app.add_subcommand("altc", "clockwise alternation of a plane graph"));
    with_file(app.add_subcommand("alta", "anticlockwise alternation of a plane graph"));
    with_file(app.add_subcommand("recognize", "structure recognition report"));

    auto* sc_minor = with_file(app.add_subcommand("minor", "minor containment"));
    sc_minor->add_option("--target", target, "g13|g23a|g23c|g351|g24|FILE")->required();

    auto* sc_enum = app.add_subcommand("enumerate", "census of classes with m edges");
    sc_enum->add_option("--edges", m, "edge count")->required();
    sc_enum->add_flag("--connected", connected, "connected classes only");
    sc_enum->add_option("--out", out, "corpus output path");

    auto* sc_verify = app.add_subcommand("verify", "replay theorem suites on the census");
    sc_verify->add_option("--suite", suite, "eti|triality|ctutte|minors|all");
    sc_verify->add_option("--max-edges", max_m, "census size bound");
    sc_verify->add_option("--seed", seed, "seed for randomized picks");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("validate")) return cmd_validate(file);
        if (app.got_subcommand("stats")) return cmd_stats(file);
        if (app.got_subcommand("classify")) return cmd_classify(file);
        if (app.got_subcommand("faces")) return cmd_faces(file);
        if (app.got_subcommand("reduce")) return cmd_reduce(file, edge, op, out);
        if (app.got_subcommand("trial")) return cmd_trial(file, square);
        if (app.got_subcommand("eti"))
            return cmd_eti(file, order_csv, all_orders, params_file, distinct);
        if (app.got_subcommand("ctutte")) return cmd_bitutte(file, all_orders, zeta, true);
        if (app.got_subcommand("atutte")) return cmd_bitutte(file, all_orders, "", false);
        if (app.got_subcommand("tutte")) return cmd_tutte(file);
        if (app.got_subcommand("altc")) return cmd_alt(file, true);
        if (app.got_subcommand("alta")) return cmd_alt(file, false);
        if (app.got_subcommand("recognize")) return cmd_recognize(file);
        if (app.got_subcommand("minor")) return cmd_minor(file, target);
        if (app.got_subcommand("enumerate")) return cmd_enumerate(m, connected, out);
        if (app.got_subcommand("verify")) return cmd_verify(suite, max_m, seed);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const NotWellDefinedError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        if (!ex.witness_a.empty())
            std::cerr << "witness orderings: [" << ex.witness_a << "] vs [" << ex.witness_b
                      << "]\n";
        return 2;
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const FormatError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const IoError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const PreconditionError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const InternalCheckError& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 4;
    }
}
