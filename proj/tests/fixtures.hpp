#pragma once

#include <string>
#include <vector>

#include "adm/core.hpp"

namespace fix {

using namespace adm;

inline std::vector<std::string> labels(int m) {
    std::vector<std::string> l;
    for (int i = 1; i <= m; i++) l.push_back("e" + std::to_string(i));
    return l;
}

// Single ultraloop: one vertex, one loop, all permutations trivial.
inline AlternatingDimap ultraloop() {
    return from_triple(triple_from_generators(labels(1), {0}, {0}));
}

// The digon: two vertices joined by two parallel edges forming a clockwise
// face of size two (the image of a single undirected edge).
inline AlternatingDimap digon() {
    return from_triple(triple_from_generators(labels(2), {0, 1}, {1, 0}));
}

// One vertex carrying two loops, rotations interleaved two different ways.
inline AlternatingDimap two_loop_a() {  // sigma1 swaps, sigma_omega identity
    return from_triple(triple_from_generators(labels(2), {1, 0}, {0, 1}));
}
inline AlternatingDimap two_loop_b() {  // both generators swap
    return from_triple(triple_from_generators(labels(2), {1, 0}, {1, 0}));
}

// Standalone directed 3-cycle: every head has degree two.
inline AlternatingDimap c3() {
    return from_triple(triple_from_generators(labels(3), {0, 1, 2}, {1, 2, 0}));
}

// Directed n-cycle.
inline AlternatingDimap cycle(int n) {
    std::vector<int> id(n), shift(n);
    for (int i = 0; i < n; i++) {
        id[i] = i;
        shift[i] = (i + 1) % n;
    }
    return from_triple(triple_from_generators(labels(n), id, shift));
}

// Torus example: all three permutations are 3-cycles, so is=af=cf=1 and the
// Euler relation forces genus one.
inline AlternatingDimap torus3() {
    return from_triple(triple_from_generators(labels(3), {1, 2, 0}, {2, 0, 1}));
}

}  // namespace fix
