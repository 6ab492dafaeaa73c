#ifndef MWLAT_LATTICE_HPP
#define MWLAT_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwlat/abelian.hpp"

namespace mwlat {

using LatticeVector = std::vector<Int>;

struct Lattice {
    IntegerMatrix gram; // symmetric
    std::vector<std::string> basis_labels;        // optional, may be empty
    std::optional<LatticeVector> marked_e;        // distinguished isotropic vector

    std::size_t rank() const { return gram.rows(); }
};

struct Isometry {
    IntegerMatrix matrix; // M^T G M = G, det = +-1
};

struct DiscriminantGroup {
    FgAbelianGroup group;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
};

struct IsotropicQuotient {
    Lattice quotient;        // rank(L) - 2 for unimodular L
    IntegerMatrix perp_basis; // n x (n-1), columns span the saturated e-perp
    IntegerMatrix lift;       // n x (n-2), section of the projection
    IntegerMatrix project;    // (n-2) x (n-1), e-perp coordinates -> quotient
};

Int inner(const Lattice& l, const LatticeVector& a, const LatticeVector& b);
Int norm_of(const Lattice& l, const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

Lattice make_lattice(IntegerMatrix gram);
// Construction expressions: atoms U, I(+1), I(-1), E8(-1), A2(-1), Lambda(d);
// k-fold copies by an integer prefix (e.g. 2U, 9I(-1)); orthogonal sums
// joined with '+'. Lambda(d) carries a marked primitive isotropic vector.
Lattice make_standard(const std::string& expr);

// Exact eigenvalue sign counts; throws on a degenerate Gram matrix,
// reporting the radical rank.
Signature signature(const Lattice& l);
std::size_t radical_rank(const Lattice& l);
bool is_even(const Lattice& l);
DiscriminantGroup discriminant_group(const Lattice& l);

IsotropicQuotient isotropic_quotient(const Lattice& l, const LatticeVector& e);

// Ambient coordinates of a vector in e-perp mapped to quotient coordinates.
LatticeVector quotient_coords(const IsotropicQuotient& q, const LatticeVector& ambient);

Isometry make_isometry(const Lattice& l, IntegerMatrix m);
Isometry eichler(const Lattice& l, const LatticeVector& e, const LatticeVector& c_lift);
Isometry reflection(const Lattice& l, const LatticeVector& c);
int spinor_orientation_sign(const Lattice& l, const Isometry& g);

// All vectors of the given negative norm in a negative-definite lattice,
// sorted lexicographically.
std::vector<LatticeVector> roots(const Lattice& l, const Int& norm);

// Signature-based label for indefinite even unimodular lattices
// ("aE8(-1) + bU" / "aE8(+1) + bU" / "bU"); the definite rank-8 negative
// case is certified as "E8(-1)" by the 240-root count and the Dynkin graph
// of a simple-root set.
std::string classify_even_unimodular_indefinite(const Lattice& l);

// A basis of dE8(-1) + (2d-2)U consisting of norm -2 vectors, with a
// unimodular change of basis to the standard one.
std::vector<LatticeVector> minus_two_basis(std::size_t d);

// The model lattice dE8(-1) + (2d-2)U the minus_two_basis lives in.
Lattice minus_two_model(std::size_t d);

// Dynkin-graph test used to certify E8: 8 simple roots, degree multiset
// {1,1,1,2,2,2,2,3}, branch lengths {1,2,4} at the degree-3 node.
bool has_e8_dynkin_graph(const Lattice& l, const std::vector<LatticeVector>& root_list);

} // namespace mwlat

#endif
