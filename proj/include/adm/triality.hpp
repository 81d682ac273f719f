#pragma once

#include "adm/core.hpp"
#include "adm/reduce.hpp"

namespace adm {

// The trial transform sends (sigma1, sigma_omega, sigma_omega2) to
// (sigma_omega2, sigma1^-1, sigma_omega^-1). This is the unique assignment
// that fixes every edge identity, rotates the statistics as is -> cf,
// af -> is, cf -> af, maps the loop flags along the 1 -> omega -> omega2
// cycle, and preserves the composition convention:
//   sigma_omega' = sigma_omega2' . sigma1'
//     <=>  sigma1^-1 = sigma_omega^-1 . sigma_omega2,
// which follows from sigma_omega = sigma_omega2 . sigma1. Applying it three
// times gives back the original triple.
inline PermutationTriple trial(const PermutationTriple& t) {
    PermutationTriple r;
    r.labels = t.labels;
    r.s1 = t.sw2;
    r.sw = detail::inverse_perm(t.s1);
    r.sw2 = detail::inverse_perm(t.sw);
    return r;
}

inline AlternatingDimap trial(const AlternatingDimap& d) {
    return from_triple(trial(to_triple(d)));
}

inline AlternatingDimap trial2(const AlternatingDimap& d) { return trial(trial(d)); }

// How edge types move under the trial: the 1 -> omega -> omega2 cycle on
// proper triloops and proper semiloops, fixing ultraloops and proper edges.
inline EdgeClass::Kind trial_class(EdgeClass::Kind k) {
    switch (k) {
        case EdgeClass::Proper1Loop: return EdgeClass::ProperOmegaLoop;
        case EdgeClass::ProperOmegaLoop: return EdgeClass::ProperOmega2Loop;
        case EdgeClass::ProperOmega2Loop: return EdgeClass::Proper1Loop;
        case EdgeClass::Proper1Semiloop: return EdgeClass::ProperOmegaSemiloop;
        case EdgeClass::ProperOmegaSemiloop: return EdgeClass::ProperOmega2Semiloop;
        case EdgeClass::ProperOmega2Semiloop: return EdgeClass::Proper1Semiloop;
        default: return k;
    }
}

}  // namespace adm
