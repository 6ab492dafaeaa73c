#ifndef MWLAT_MONODROMY_HPP
#define MWLAT_MONODROMY_HPP

#include <string>
#include <vector>

#include "mwlat/abelian.hpp"

namespace mwlat {

// Primitive class in the rank-2 fiber lattice with symplectic pairing
// e1.e2 = +1, so (x1,y1).(x2,y2) = x1*y2 - x2*y1.
struct VanishingCycle {
    Int x, y;
};

using SL2Element = IntegerMatrix; // 2x2, det = 1
using CycleTuple = std::vector<VanishingCycle>;

bool operator==(const VanishingCycle& a, const VanishingCycle& b);
bool cycle_primitive(const VanishingCycle& d);
Int symplectic(const VanishingCycle& a, const VanishingCycle& b);
VanishingCycle apply_sl2(const SL2Element& m, const VanishingCycle& d);

// Transvection a -> a + (a.delta) delta.
SL2Element picard_lefschetz(const VanishingCycle& delta);

// tau_{delta_n} ... tau_{delta_1}: the first-listed cycle acts first.
SL2Element product_monodromy(const CycleTuple& t);

enum class Sl2Kind { identity, minus_identity, parabolic, elliptic, hyperbolic };

struct Sl2Class {
    Sl2Kind kind;
    std::size_t order = 0; // finite order for identity/minus_identity/elliptic
    std::string name() const;
};

Sl2Class classify_sl2(const SL2Element& a);

// Trace of tau_{(p,q)} tau_{(1,0)}; equals 2 - q^2, asserted by direct
// matrix arithmetic.
Int two_nodal_trace(const Int& p, const Int& q);

// coker(A - I): the Mordell-Weil group of the mapping torus of A.
FgAbelianGroup torus_bundle_mw(const SL2Element& a);

enum class MoveDirection { left, right };

// Right move at i: (d_i, d_{i+1}) -> (d_{i+1}, tau_{d_{i+1}} d_i); the left
// move is its inverse. Both preserve product_monodromy. i is 1-based.
CycleTuple hurwitz_move(const CycleTuple& t, std::size_t i, MoveDirection dir);

struct EquinodalHit {
    std::vector<std::pair<std::size_t, MoveDirection>> moves; // from the input tuple
    std::size_t pair_index;  // 1-based position of the adjacent pair
    VanishingCycle cycle;    // shared class, sign-normalized
    CycleTuple tuple;
};

struct EquinodalSearch {
    std::vector<EquinodalHit> hits;
    std::size_t visited = 0;
    bool exhausted = false; // orbit ball fully explored within the depth bound
};

// Breadth-first search of the Hurwitz orbit up to max_moves, reporting
// tuples with an adjacent pair spanning the same rank-1 subgroup.
// Bounded search: stops after max_hits results or node_budget states.
EquinodalSearch find_equinodal_pairs(const CycleTuple& t, std::size_t max_moves,
                                     std::size_t max_hits = 1,
                                     std::size_t node_budget = 200000);

// 1-based index of the first adjacent pair spanning the same rank-1
// subgroup, 0 when there is none.
std::size_t adjacent_equinodal_index(const CycleTuple& t);

} // namespace mwlat

#endif
