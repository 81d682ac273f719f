#pragma once

#include <array>
#include <optional>
#include <string>

#include "adm/poly.hpp"

namespace adm {

// Indices into the 16-parameter sequence (w,x,y,z,a,...,l).
enum Param : int {
    PW = 0, PX, PY, PZ, PA, PB, PC, PD, PE, PF, PG, PH, PI, PJ, PK, PL
};

// An assignment to the 16 recursion parameters. Each entry is either the
// corresponding free symbol (nullopt) or an exact rational value.
class ParamSeq16 {
  public:
    static ParamSeq16 symbolic() { return ParamSeq16(); }

    static ParamSeq16 numeric(const std::array<Rational, 16>& vals) {
        ParamSeq16 p;
        for (int i = 0; i < 16; i++) p.entries_[i] = vals[i];
        return p;
    }

    const std::optional<Rational>& entry(int i) const { return entries_[i]; }
    void set(int i, Rational v) { entries_[i] = std::move(v); }
    void set_symbolic(int i) { entries_[i].reset(); }

    bool is_numeric() const {
        for (auto& e : entries_)
            if (!e) return false;
        return true;
    }

    std::array<Rational, 16> values() const {
        std::array<Rational, 16> v;
        for (int i = 0; i < 16; i++) {
            if (!entries_[i])
                throw PreconditionError("SymbolicEntry: parameter '" + Vars16::names()[i] +
                                        "' is a free symbol");
            v[i] = *entries_[i];
        }
        return v;
    }

    // Each entry as a polynomial: a free symbol becomes its own variable.
    std::array<MultiPoly16, 16> as_polys() const {
        std::array<MultiPoly16, 16> w;
        for (int i = 0; i < 16; i++)
            w[i] = entries_[i] ? MultiPoly16::constant(*entries_[i]) : MultiPoly16::var(i);
        return w;
    }

    static int index_of(const std::string& name) {
        for (int i = 0; i < 16; i++)
            if (Vars16::names()[i] == name) return i;
        return -1;
    }

  private:
    std::array<std::optional<Rational>, 16> entries_;  // nullopt = free symbol
};

// The four compatibility conditions on a fully numeric parameter sequence:
//   xyz = jyz + kxy + lxz
//   yz  = aw + by + cz
//   xz  = dz + ex + fw
//   xy  = gy + hw + ix
struct EtiConditions {
    bool cond_xyz = false, cond_yz = false, cond_xz = false, cond_xy = false;
    bool all() const { return cond_xyz && cond_yz && cond_xz && cond_xy; }
};

inline EtiConditions check_eti_conditions(const ParamSeq16& p) {
    auto v = p.values();
    EtiConditions r;
    r.cond_xyz = v[PX] * v[PY] * v[PZ] ==
                 v[PJ] * v[PY] * v[PZ] + v[PK] * v[PX] * v[PY] + v[PL] * v[PX] * v[PZ];
    r.cond_yz = v[PY] * v[PZ] == v[PA] * v[PW] + v[PB] * v[PY] + v[PC] * v[PZ];
    r.cond_xz = v[PX] * v[PZ] == v[PD] * v[PZ] + v[PE] * v[PX] + v[PF] * v[PW];
    r.cond_xy = v[PX] * v[PY] == v[PG] * v[PY] + v[PH] * v[PW] + v[PI] * v[PX];
    return r;
}

}  // namespace adm
