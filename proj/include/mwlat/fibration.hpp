#ifndef MWLAT_FIBRATION_HPP
#define MWLAT_FIBRATION_HPP

#include <string>
#include <vector>

#include "mwlat/lattice.hpp"
#include "mwlat/monodromy.hpp"

namespace mwlat {

enum class BaseSurface { disk, sphere };

struct FibrationDescription {
    BaseSurface base = BaseSurface::disk;
    CycleTuple cycles; // ordered along the path/loop system from the basepoint

    // arithmetic genus of a valid sphere description
    std::size_t genus() const { return cycles.size() / 12; }
};

struct Violation {
    std::string code;
    std::string message;
};

struct MWReport {
    FgAbelianGroup mw;
    FgAbelianGroup mw_boundary;      // disk only
    FgAbelianGroup mw_relative;      // disk only; free, rank certified
    FgAbelianGroup restriction_image; // image of MW in MW(boundary), disk only
};

// Primitivity of every cycle; for the sphere also trivial total monodromy
// and cycle count divisible by 12. Never throws; returns the violations.
std::vector<Violation> validate(const FibrationDescription& f);

FgAbelianGroup mw_disk(const FibrationDescription& f);
FgAbelianGroup mw_boundary_disk(const FibrationDescription& f);
FgAbelianGroup mw_relative_disk(const FibrationDescription& f);
FgAbelianGroup restriction_image_disk(const FibrationDescription& f);
MWReport mw_report_disk(const FibrationDescription& f);

// MW(pi) / image of MW(pi, boundary); its order is the index of that image.
FgAbelianGroup mw_modulo_relative_image_disk(const FibrationDescription& f);

struct SphereMW {
    FgAbelianGroup group;      // free of rank 12d - 4
    std::string lattice_label; // label of the model lattice dE8(-1) + (2d-2)U
};

SphereMW mw_sphere(const FibrationDescription& f);

FibrationDescription fiber_connected_sum(const FibrationDescription& f,
                                         const FibrationDescription& g);

// The standard genus-d sphere description: d copies of the 12-cycle tuple
// alternating (1,0) and (0,1).
FibrationDescription standard_sphere(std::size_t d);

struct RationalElliptic {
    Lattice lambda1;                       // I(+1) + 9I(-1), basis l, e0..e8
    LatticeVector e;                       // 3l - e0 - ... - e8
    IsotropicQuotient quotient;            // rank-8 quotient
    std::vector<LatticeVector> basis;      // images of the eight listed classes
    std::vector<LatticeVector> basis_ambient;
};

// The degree-1 case over the sphere realized inside I(+1) + 9I(-1), with a
// norm -2 basis of the quotient whose Gram matrix is the E8(-1) one.
RationalElliptic rational_elliptic_mw();

} // namespace mwlat

#endif
