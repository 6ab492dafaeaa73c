#pragma once

#include "mwlat/abelian.hpp"
#include "mwlat/lattice.hpp"

#include <optional>

namespace mwlat {

// Witness that g is unipotent: the exact nilpotency index of g - I and a
// saturated basis of the fixed sublattice ker(g - I).
struct UnipotentCertificate {
    std::size_t nilpotency_index;
    IntegerMatrix fixed_lattice;
};

// Checks (g - I)^k = 0 for some k up to the rank; nullopt otherwise.
std::optional<UnipotentCertificate> is_unipotent(const Isometry& g);

// Rank of the fixed sublattice against the lower bound 4d + 2 for
// unipotent isometries of the degree-d model lattice.
bool fixed_rank_bound_check(const Isometry& g, std::size_t d);

// Independent certification of a search result.
bool verify_isotropic_fixed(const Lattice& l, const Isometry& g, const LatticeVector& v);

// Bounded exhaustive search for a primitive isotropic fixed vector of a
// unipotent g: coefficient vectors of sup-norm <= bound over a reduced
// fixed-lattice basis, in a fixed canonical order. nullopt means the
// bounded search was exhausted, not that no such vector exists.
std::optional<LatticeVector> find_primitive_isotropic_fixed(const Lattice& l, const Isometry& g,
                                                            unsigned long bound);

} // namespace mwlat
