#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "adm/core.hpp"
#include "adm/errors.hpp"

namespace adm {

// All alternating dimaps with m labeled edges are exactly the pairs
// (sigma1, sigma_omega) of permutations of the edge set: the right-successor
// map is determined by the composition convention. The census enumerates the
// pairs, canonicalizes, and keeps one representative per isomorphism class.
struct Corpus {
    int m = 0;
    bool connected_only = false;
    std::vector<PermutationTriple> classes;  // representatives, sorted by canonical key
};

namespace detail {

inline bool next_permutation_vec(std::vector<int>& p) {
    return std::next_permutation(p.begin(), p.end());
}

}  // namespace detail

inline bool is_connected_triple(const PermutationTriple& t) {
    int m = t.size();
    if (m == 0) return true;
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    auto inv1 = detail::inverse_perm(t.s1);
    auto invw = detail::inverse_perm(t.sw);
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        count++;
        for (int nb : {t.s1[x], t.sw[x], inv1[x], invw[x]}) {
            if (!seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
        }
    }
    return count == m;
}

inline Corpus enumerate_dimaps(int m, bool connected_only = false, int max_edges = 6) {
    if (m < 0 || m > max_edges)
        throw PreconditionError("SizeBoundExceeded: m=" + std::to_string(m) +
                                " exceeds the bound " + std::to_string(max_edges));
    Corpus corpus;
    corpus.m = m;
    corpus.connected_only = connected_only;
    std::vector<std::string> labels;
    for (int i = 1; i <= m; i++) labels.push_back("e" + std::to_string(i));
    if (m == 0) return corpus;

    std::map<std::string, PermutationTriple> seen;
    std::vector<int> s1(m);
    std::iota(s1.begin(), s1.end(), 0);
    do {
        std::vector<int> sw(m);
        std::iota(sw.begin(), sw.end(), 0);
        do {
            PermutationTriple t = triple_from_generators(labels, s1, sw);
            if (connected_only && !is_connected_triple(t)) continue;
            CanonicalForm key = canonical_form(t);
            if (seen.emplace(key.key, t).second) {
                // sanity: every triple round-trips through a rotation system
                check_triple(t);
            }
        } while (detail::next_permutation_vec(sw));
    } while (detail::next_permutation_vec(s1));
    for (auto& [_, t] : seen) corpus.classes.push_back(t);
    return corpus;
}

// Convenience: the connected classes of every size 1..m as dimaps.
inline std::vector<AlternatingDimap> corpus_dimaps(int max_m, bool connected_only = true) {
    std::vector<AlternatingDimap> out;
    for (int m = 1; m <= max_m; m++)
        for (auto& t : enumerate_dimaps(m, connected_only).classes)
            out.push_back(from_triple(t));
    return out;
}

}  // namespace adm
