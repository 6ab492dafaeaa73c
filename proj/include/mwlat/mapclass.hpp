#pragma once

#include "mwlat/abelian.hpp"
#include "mwlat/lattice.hpp"

#include <string>

namespace mwlat {

// Element of the relative mapping class group of the equinodal disk in the
// normal form F^m t^k, where F is the basic translation and t the boundary
// twist, subject to t F t^{-1} = F^{-1}.
struct ModPiWord {
    Int m;
    Int k;
};

bool operator==(const ModPiWord& a, const ModPiWord& b);
bool operator!=(const ModPiWord& a, const ModPiWord& b);

ModPiWord mp_identity();
ModPiWord mp_f();
ModPiWord mp_t();
ModPiWord mp_f_inverse();
ModPiWord mp_t_inverse();

// Twist about the companion sphere, normal form (1,1).
ModPiWord tau_c1();

ModPiWord mp_multiply(const ModPiWord& a, const ModPiWord& b);
ModPiWord mp_inverse(const ModPiWord& w);
ModPiWord mp_power(const ModPiWord& w, long n);

// Parses a word over the tokens F, F', t, t' (primes are inverses),
// separated by whitespace or '*'; the product is taken in listed order.
ModPiWord parse_mapclass_word(const std::string& word);

// Image in the mapping class group of the total space rel boundary, an
// infinite dihedral group: the twist exponent only survives mod 2.
struct ModXImage {
    Int m;
    int k; // 0 or 1
};

bool operator==(const ModXImage& a, const ModXImage& b);
ModXImage to_mod_x(const ModPiWord& w);
ModXImage mod_x_multiply(const ModXImage& a, const ModXImage& b);

// Intersection form on the (e, c) basis of the middle homology:
// e isotropic, c of square -2, orthogonal to each other.
IntegerMatrix h2_gram();

// Pairing of the relative basis (sigma_0, sigma_1) against (e, c);
// row i holds the values of sigma_i.
IntegerMatrix pairing_table();

// Action on the middle homology, columns in the (e, c) basis.
IntegerMatrix h2_action(const ModPiWord& w);

// Induced action on relative classes, columns in the (sigma_0, sigma_1)
// basis, obtained as the pairing-dual of h2_action.
IntegerMatrix h2_rel_action(const ModPiWord& w);

// Variation map from relative to absolute classes: columns are the
// (e, c) coordinates of the images of sigma_0 and sigma_1.
IntegerMatrix variation(const ModPiWord& w);

// Class of the n-th sphere, c + n e, as (e, c) coordinates.
LatticeVector sphere_class(const Int& n);

// Intersection number of the m-th section with the n-th sphere.
Int section_sphere_pairing(const Int& m, const Int& n);

} // namespace mwlat
