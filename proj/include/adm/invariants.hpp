#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adm/core.hpp"
#include "adm/cyclotomic.hpp"
#include "adm/params.hpp"
#include "adm/poly.hpp"
#include "adm/reduce.hpp"

namespace adm {

// Handling of edges that carry several proper-semiloop types at once
// (possible only at positive genus, where the recursion rules are not
// specified): refuse, pick 1 > omega > omega2, or follow every applicable
// rule and collect all values.
enum class MultiPolicy { Error, Precedence, BranchAll };

namespace detail {

// Memo key: the triple with edges relabeled by ordering position, so equal
// keys mean equal remaining computations.
inline std::string eti_memo_key(const AlternatingDimap& d, const EdgeOrdering& order) {
    std::map<std::string, int> pos;
    for (auto& e : order) pos[e] = static_cast<int>(pos.size());
    PermutationTriple t = to_triple(d);
    std::string key;
    std::vector<int> by_pos(order.size(), -1);
    for (int i = 0; i < t.size(); i++) by_pos[pos.at(t.labels[i])] = i;
    for (int p = 0; p < static_cast<int>(by_pos.size()); p++) {
        int i = by_pos[p];
        key += std::to_string(pos.at(t.labels[t.s1[i]])) + "," +
               std::to_string(pos.at(t.labels[t.sw[i]])) + ";";
    }
    return key;
}

}  // namespace detail

// All values the recursion can take on (D, order) under the given policy:
// a singleton unless BranchAll meets a multi-type semiloop.
template <class R>
std::vector<R> eti_possible(const AlternatingDimap& d, const EdgeOrdering& order,
                            const std::array<R, 16>& wt, MultiPolicy policy,
                            std::map<std::string, std::vector<R>>* memo = nullptr) {
    if (order.empty()) {
        if (!d.empty())
            throw PreconditionError("ordering does not cover all edges");
        return {R(1)};
    }
    std::string key;
    if (memo) {
        key = detail::eti_memo_key(d, order);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }
    const std::string e = order.front();
    EdgeClass c = classify_edge(d, e, policy != MultiPolicy::Error);

    using Branch = std::vector<std::pair<int, ReductionKind>>;  // (weight, mu)
    std::vector<Branch> cases;
    switch (c.kind) {
        case EdgeClass::Ultraloop:
            cases.push_back({{PW, ReductionKind::Star}});
            break;
        case EdgeClass::Proper1Loop:
            cases.push_back({{PX, ReductionKind::One}});
            break;
        case EdgeClass::ProperOmegaLoop:
            cases.push_back({{PY, ReductionKind::Omega}});
            break;
        case EdgeClass::ProperOmega2Loop:
            cases.push_back({{PZ, ReductionKind::Omega2}});
            break;
        default: {
            Branch one = {{PA, ReductionKind::One},
                          {PB, ReductionKind::Omega},
                          {PC, ReductionKind::Omega2}};
            Branch om = {{PD, ReductionKind::One},
                         {PE, ReductionKind::Omega},
                         {PF, ReductionKind::Omega2}};
            Branch om2 = {{PG, ReductionKind::One},
                          {PH, ReductionKind::Omega},
                          {PI, ReductionKind::Omega2}};
            Branch prop = {{PJ, ReductionKind::One},
                           {PK, ReductionKind::Omega},
                           {PL, ReductionKind::Omega2}};
            if (policy == MultiPolicy::BranchAll) {
                if (c.is1Semiloop) cases.push_back(one);
                if (c.isOmegaSemiloop) cases.push_back(om);
                if (c.isOmega2Semiloop) cases.push_back(om2);
                if (cases.empty()) cases.push_back(prop);
            } else {
                switch (c.kind) {
                    case EdgeClass::Proper1Semiloop: cases.push_back(one); break;
                    case EdgeClass::ProperOmegaSemiloop: cases.push_back(om); break;
                    case EdgeClass::ProperOmega2Semiloop: cases.push_back(om2); break;
                    default: cases.push_back(prop); break;
                }
            }
        }
    }

    std::vector<R> result;
    for (auto& br : cases) {
        std::vector<R> acc{R(0)};
        for (auto& [widx, mu] : br) {
            auto [sub, suborder] = reduce_first(d, order, mu);
            std::vector<R> vals = eti_possible<R>(sub, suborder, wt, policy, memo);
            std::vector<R> next;
            for (auto& a : acc)
                for (auto& v : vals) next.push_back(a + wt[widx] * v);
            acc = std::move(next);
        }
        for (auto& v : acc)
            if (std::find(result.begin(), result.end(), v) == result.end())
                result.push_back(v);
    }
    if (memo) (*memo)[key] = result;
    return result;
}

inline std::array<MultiPoly16, 16> symbolic_weights() {
    std::array<MultiPoly16, 16> w;
    for (int i = 0; i < 16; i++) w[i] = MultiPoly16::var(i);
    return w;
}

// One ordering, one value. Throws on multi-type semiloops unless precedence
// is opted in.
inline MultiPoly16 eti_derived(const AlternatingDimap& d, const EdgeOrdering& order,
                               const ParamSeq16& p,
                               MultiPolicy policy = MultiPolicy::Error) {
    if (policy == MultiPolicy::BranchAll)
        throw PreconditionError("eti_derived needs a single-valued policy");
    auto vals = eti_possible<MultiPoly16>(d, order, p.as_polys(), policy);
    return vals.front();
}

inline EdgeOrdering default_ordering(const AlternatingDimap& d) { return d.edge_ids(); }

template <class R>
struct DerivedSet {
    std::vector<R> values;
    std::vector<EdgeOrdering> witnesses;  // one ordering per value

    bool well_defined() const { return values.size() <= 1; }

    void add(const R& v, const EdgeOrdering& o) {
        for (auto& existing : values)
            if (existing == v) return;
        values.push_back(v);
        witnesses.push_back(o);
    }
};

template <class R>
DerivedSet<R> derived_set(const AlternatingDimap& d, const std::array<R, 16>& wt,
                          MultiPolicy policy = MultiPolicy::BranchAll,
                          int max_edges = 7) {
    if (d.edge_count() > max_edges)
        throw PreconditionError("SizeBoundExceeded: " + std::to_string(d.edge_count()) +
                                " edges exceeds the all-orderings bound");
    DerivedSet<R> out;
    EdgeOrdering order = d.edge_ids();
    std::sort(order.begin(), order.end());
    std::map<std::string, std::vector<R>> memo;
    do {
        for (auto& v : eti_possible<R>(d, order, wt, policy, &memo)) out.add(v, order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

inline DerivedSet<MultiPoly16> eti_all_orderings(const AlternatingDimap& d,
                                                 const ParamSeq16& p,
                                                 MultiPolicy policy = MultiPolicy::BranchAll,
                                                 int max_edges = 7) {
    return derived_set<MultiPoly16>(d, p.as_polys(), policy, max_edges);
}

struct WellDefinedReport {
    bool well_defined = false;
    size_t value_count = 0;
    EdgeOrdering witness_a, witness_b;  // two orderings with different values
};

inline WellDefinedReport eti_well_defined(const AlternatingDimap& d, const ParamSeq16& p,
                                          MultiPolicy policy = MultiPolicy::BranchAll,
                                          int max_edges = 7) {
    DerivedSet<MultiPoly16> s = eti_all_orderings(d, p, policy, max_edges);
    WellDefinedReport r;
    r.value_count = s.values.size();
    r.well_defined = s.well_defined();
    if (!r.well_defined) {
        r.witness_a = s.witnesses[0];
        r.witness_b = s.witnesses[1];
    }
    return r;
}

// ---- closed form and degenerate regimes -------------------------------------

inline Rational eti_closed_form(const AlternatingDimap& d, const ParamSeq16& p) {
    auto v = p.values();
    for (int i : {PW, PX, PY, PZ})
        if (v[i].is_zero())
            throw PreconditionError(std::string("ConditionsViolated: parameter '") +
                                    Vars16::names()[i] + "' must be nonzero");
    EtiConditions c = check_eti_conditions(p);
    if (!c.all()) {
        std::string which;
        if (!c.cond_xyz) which += " xyz=jyz+kxy+lxz";
        if (!c.cond_yz) which += " yz=aw+by+cz";
        if (!c.cond_xz) which += " xz=dz+ex+fw";
        if (!c.cond_xy) which += " xy=gy+hw+ix";
        throw PreconditionError("ConditionsViolated:" + which);
    }
    DimapStats st = stats(d);
    return v[PW].pow(st.k) * v[PX].pow(st.is - st.k) * v[PY].pow(st.af - st.k) *
           v[PZ].pow(st.cf - st.k);
}

// The seven zero-parameter regimes. Each requires w != 0, a stated zero
// pattern among x, y, z, specific vanishing parameters, and (for the
// single-zero regimes) the surviving compatibility equation.
inline Rational eti_degenerate(const AlternatingDimap& d, const ParamSeq16& p) {
    auto v = p.values();
    if (v[PW].is_zero()) throw PreconditionError("RegimeConstraintViolated: w must be nonzero");
    bool zx = v[PX].is_zero(), zy = v[PY].is_zero(), zz = v[PZ].is_zero();
    if (!zx && !zy && !zz)
        throw PreconditionError("NoMatchingRegime: none of x, y, z vanish");
    auto need_zero = [&](std::initializer_list<int> idx) {
        for (int i : idx)
            if (!v[i].is_zero())
                throw PreconditionError(std::string("RegimeConstraintViolated: '") +
                                        Vars16::names()[i] + "' must be zero");
    };
    auto need_eq = [&](bool ok, const char* eq) {
        if (!ok)
            throw PreconditionError(std::string("RegimeConstraintViolated: ") + eq);
    };
    DimapStats st = stats(d);
    const Rational zero(0);
    Rational wk = v[PW].pow(st.k);
    if (zx && zy && zz) {
        need_zero({PA, PF, PH});
        return (st.is == st.k && st.af == st.k && st.cf == st.k) ? wk : zero;
    }
    if (zx && zy) {
        need_zero({PA, PC, PD, PF, PH});
        return (st.is == st.k && st.af == st.k) ? wk * v[PZ].pow(st.cf - st.k) : zero;
    }
    if (zx && zz) {
        need_zero({PA, PB, PF, PG, PH});
        return (st.is == st.k && st.cf == st.k) ? wk * v[PY].pow(st.af - st.k) : zero;
    }
    if (zy && zz) {
        need_zero({PA, PE, PF, PH, PI});
        return (st.af == st.k && st.cf == st.k) ? wk * v[PX].pow(st.is - st.k) : zero;
    }
    if (zx) {
        need_zero({PD, PF, PG, PH, PJ});
        need_eq(v[PY] * v[PZ] == v[PA] * v[PW] + v[PB] * v[PY] + v[PC] * v[PZ],
                "yz=aw+by+cz");
        return st.is == st.k ? wk * v[PY].pow(st.af - st.k) * v[PZ].pow(st.cf - st.k)
                             : zero;
    }
    if (zy) {
        need_zero({PA, PC, PH, PI, PL});
        need_eq(v[PX] * v[PZ] == v[PD] * v[PZ] + v[PE] * v[PX] + v[PF] * v[PW],
                "xz=dz+ex+fw");
        return st.af == st.k ? wk * v[PX].pow(st.is - st.k) * v[PZ].pow(st.cf - st.k)
                             : zero;
    }
    need_zero({PA, PB, PE, PF, PK});
    need_eq(v[PX] * v[PY] == v[PG] * v[PY] + v[PH] * v[PW] + v[PI] * v[PX],
            "xy=gy+hw+ix");
    return st.cf == st.k ? wk * v[PX].pow(st.is - st.k) * v[PY].pow(st.af - st.k) : zero;
}

// ---- c-Tutte and a-Tutte as weight tables -----------------------------------

// T_c corresponds to the parameter sequence
//   x = f = alpha, y = a = beta, w = z = h = j = l = 1, rest 0,
// T_a to
//   x = h = alpha, z = a = beta, w = y = f = j = k = 1, rest 0,
// where alpha, beta are the two variables of the bivariate result.
template <class R>
std::array<R, 16> ctutte_weights(const R& alpha, const R& beta) {
    std::array<R, 16> w;
    w.fill(R(0));
    w[PW] = R(1);
    w[PX] = alpha;
    w[PY] = beta;
    w[PZ] = R(1);
    w[PA] = beta;
    w[PF] = alpha;
    w[PH] = R(1);
    w[PJ] = R(1);
    w[PL] = R(1);
    return w;
}

template <class R>
std::array<R, 16> atutte_weights(const R& alpha, const R& beta) {
    std::array<R, 16> w;
    w.fill(R(0));
    w[PW] = R(1);
    w[PX] = alpha;
    w[PY] = R(1);
    w[PZ] = beta;
    w[PA] = beta;
    w[PF] = R(1);
    w[PH] = alpha;
    w[PJ] = R(1);
    w[PK] = R(1);
    return w;
}

inline BiPoly ctutte_derived(const AlternatingDimap& d, const EdgeOrdering& order,
                             MultiPolicy policy = MultiPolicy::Error) {
    auto wt = ctutte_weights<BiPoly>(BiPoly::var(0), BiPoly::var(1));
    return eti_possible<BiPoly>(d, order, wt, policy).front();
}

inline BiPoly atutte_derived(const AlternatingDimap& d, const EdgeOrdering& order,
                             MultiPolicy policy = MultiPolicy::Error) {
    auto wt = atutte_weights<BiPoly>(BiPoly::var(0), BiPoly::var(1));
    return eti_possible<BiPoly>(d, order, wt, policy).front();
}

inline DerivedSet<BiPoly> ctutte_all_orderings(const AlternatingDimap& d,
                                               int max_edges = 7) {
    return derived_set<BiPoly>(
        d, ctutte_weights<BiPoly>(BiPoly::var(0), BiPoly::var(1)),
        MultiPolicy::BranchAll, max_edges);
}

inline DerivedSet<BiPoly> atutte_all_orderings(const AlternatingDimap& d,
                                               int max_edges = 7) {
    return derived_set<BiPoly>(
        d, atutte_weights<BiPoly>(BiPoly::var(0), BiPoly::var(1)),
        MultiPolicy::BranchAll, max_edges);
}

// The common derived value, verified across all orderings.
inline BiPoly ctutte(const AlternatingDimap& d, int max_edges = 7) {
    DerivedSet<BiPoly> s = ctutte_all_orderings(d, max_edges);
    if (d.edge_count() > 0 && s.values.size() != 1) {
        std::string wa, wb;
        for (auto& e : s.witnesses[0]) wa += (wa.empty() ? "" : ",") + e;
        for (auto& e : s.witnesses[1]) wb += (wb.empty() ? "" : ",") + e;
        throw NotWellDefinedError("c-Tutte invariant is not well defined here (values " +
                                      s.values[0].render() + " and " +
                                      s.values[1].render() + ")",
                                  wa, wb);
    }
    return d.edge_count() == 0 ? BiPoly::one() : s.values[0];
}

inline BiPoly atutte(const AlternatingDimap& d, int max_edges = 7) {
    DerivedSet<BiPoly> s = atutte_all_orderings(d, max_edges);
    if (d.edge_count() > 0 && s.values.size() != 1) {
        std::string wa, wb;
        for (auto& e : s.witnesses[0]) wa += (wa.empty() ? "" : ",") + e;
        for (auto& e : s.witnesses[1]) wb += (wb.empty() ? "" : ",") + e;
        throw NotWellDefinedError("a-Tutte invariant is not well defined here (values " +
                                      s.values[0].render() + " and " +
                                      s.values[1].render() + ")",
                                  wa, wb);
    }
    return d.edge_count() == 0 ? BiPoly::one() : s.values[0];
}

// At the primitive sixth roots of unity the c-Tutte invariant is well defined
// for every alternating dimap and equals zeta^{is-af} (plus sign) or its
// conjugate (minus sign); the a-Tutte analogue has exponent is-cf.
inline Cyclotomic6 ctutte_zeta(const AlternatingDimap& d, bool plus = true) {
    DimapStats st = stats(d);
    long long n = st.is - st.af;
    return plus ? zeta_pow(n) : zeta_pow(-n);
}

inline Cyclotomic6 atutte_zeta(const AlternatingDimap& d, bool plus = true) {
    DimapStats st = stats(d);
    long long n = st.is - st.cf;
    return plus ? zeta_pow(n) : zeta_pow(-n);
}

// ---- trial parameter permutations -------------------------------------------

// F(D; w,x,...,l) = F(D^omega; w,z,x,y,h,i,g,b,c,a,e,f,d,k,l,j)
//                 = F(D^omega2; w,y,z,x,f,d,e,i,g,h,c,a,b,l,j,k).
// Applying these as variable renamings to the polynomial computed on the
// trial image recovers the original polynomial.
inline std::array<int, 16> trial_param_perm() {
    std::array<int, 16> p;
    p[PW] = PW;
    p[PX] = PZ;
    p[PY] = PX;
    p[PZ] = PY;
    p[PA] = PH;
    p[PB] = PI;
    p[PC] = PG;
    p[PD] = PB;
    p[PE] = PC;
    p[PF] = PA;
    p[PG] = PE;
    p[PH] = PF;
    p[PI] = PD;
    p[PJ] = PK;
    p[PK] = PL;
    p[PL] = PJ;
    return p;
}

inline std::array<int, 16> trial2_param_perm() {
    std::array<int, 16> p;
    p[PW] = PW;
    p[PX] = PY;
    p[PY] = PZ;
    p[PZ] = PX;
    p[PA] = PF;
    p[PB] = PD;
    p[PC] = PE;
    p[PD] = PI;
    p[PE] = PG;
    p[PF] = PH;
    p[PG] = PC;
    p[PH] = PA;
    p[PI] = PB;
    p[PJ] = PL;
    p[PK] = PJ;
    p[PL] = PK;
    return p;
}

}  // namespace adm
