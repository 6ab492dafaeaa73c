#include "mwlat/fibration.hpp"

#include <sstream>

namespace mwlat {

namespace {

// Row i is the pairing functional v -> v . delta_i, so the column span is
// the group of coboundaries in the coefficient coordinates.
IntegerMatrix coboundary_matrix(const CycleTuple& t) {
    IntegerMatrix b(t.size(), 2);
    for (std::size_t i = 0; i < t.size(); ++i) {
        b.at(i, 0) = t[i].y;
        b.at(i, 1) = -t[i].x;
    }
    return b;
}

// Column i is M_i delta_i with M_i = A_n ... A_{i+1}: evaluation of a
// cocycle with coefficients c at the composite boundary loop.
IntegerMatrix eval_matrix(const CycleTuple& t) {
    std::size_t n = t.size();
    IntegerMatrix e(2, n);
    IntegerMatrix m = IntegerMatrix::identity(2);
    for (std::size_t i = n; i-- > 0;) {
        VanishingCycle md = apply_sl2(m, t[i]);
        e.at(0, i) = md.x;
        e.at(1, i) = md.y;
        m = m * picard_lefschetz(t[i]);
    }
    return e;
}

IntegerMatrix boundary_difference(const CycleTuple& t) {
    return product_monodromy(t) - IntegerMatrix::identity(2);
}

// Common fixed sublattice of all the transvections.
IntegerMatrix common_fixed(const CycleTuple& t) {
    if (t.empty()) return IntegerMatrix::identity(2);
    IntegerMatrix stacked(0, 2);
    for (const auto& d : t)
        stacked = vstack(stacked, picard_lefschetz(d) - IntegerMatrix::identity(2));
    return kernel_saturated(stacked);
}

void require_disk(const FibrationDescription& f) {
    if (f.base != BaseSurface::disk) throw Error("base", "operation needs a disk base");
}

void require_valid_sphere(const FibrationDescription& f) {
    if (f.base != BaseSurface::sphere) throw Error("base", "operation needs a sphere base");
    auto v = validate(f);
    if (!v.empty()) {
        std::ostringstream os;
        os << "invalid sphere description:";
        for (const auto& x : v) os << " [" << x.code << "] " << x.message;
        throw Error("validation", os.str());
    }
}

// Generators of {c : E c lies in the column span of D}, the coefficient
// classes restricting to the boundary coboundaries.
IntegerMatrix boundary_kernel_generators(const IntegerMatrix& e, const IntegerMatrix& d) {
    IntegerMatrix k = kernel_saturated(hstack(e, d)); // (n+2) x r
    std::size_t n = e.cols();
    IntegerMatrix proj(n, k.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) proj.at(i, j) = k.at(i, j);
    return proj;
}

} // namespace

std::vector<Violation> validate(const FibrationDescription& f) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < f.cycles.size(); ++i)
        if (!cycle_primitive(f.cycles[i])) {
            std::ostringstream os;
            os << "cycle " << i + 1 << " is not primitive";
            out.push_back({"primitivity", os.str()});
        }
    if (f.base == BaseSurface::sphere) {
        if (f.cycles.empty() || f.cycles.size() % 12 != 0)
            out.push_back({"count", "sphere descriptions need a positive cycle count divisible by 12"});
        if (!out.empty() && out.front().code == "primitivity") return out;
        if (!product_monodromy(f.cycles).is_identity())
            out.push_back({"monodromy", "total monodromy of a sphere description must be trivial"});
    }
    return out;
}

FgAbelianGroup mw_disk(const FibrationDescription& f) {
    require_disk(f);
    for (const auto& d : f.cycles)
        if (!cycle_primitive(d)) throw Error("validation", "cycle is not primitive");
    return cokernel(coboundary_matrix(f.cycles));
}

FgAbelianGroup mw_boundary_disk(const FibrationDescription& f) {
    require_disk(f);
    return torus_bundle_mw(product_monodromy(f.cycles));
}

FgAbelianGroup restriction_image_disk(const FibrationDescription& f) {
    require_disk(f);
    return subquotient(eval_matrix(f.cycles), boundary_difference(f.cycles));
}

FgAbelianGroup mw_relative_disk(const FibrationDescription& f) {
    require_disk(f);
    std::size_t h0_base = common_fixed(f.cycles).cols();
    std::size_t h0_boundary = kernel_saturated(boundary_difference(f.cycles)).cols();
    std::size_t invariants_term = h0_boundary - h0_base;

    FgAbelianGroup mw = mw_disk(f);
    FgAbelianGroup image = restriction_image_disk(f);
    std::size_t kernel_term = mw.free_rank - image.free_rank;

    // free by the structure of the relative group; only the rank is computed
    return FgAbelianGroup{invariants_term + kernel_term, {}};
}

FgAbelianGroup mw_modulo_relative_image_disk(const FibrationDescription& f) {
    require_disk(f);
    IntegerMatrix e = eval_matrix(f.cycles);
    IntegerMatrix d = boundary_difference(f.cycles);
    IntegerMatrix pre = boundary_kernel_generators(e, d);
    return cokernel(hstack(pre, coboundary_matrix(f.cycles)));
}

MWReport mw_report_disk(const FibrationDescription& f) {
    MWReport r;
    r.mw = mw_disk(f);
    r.mw_boundary = mw_boundary_disk(f);
    r.mw_relative = mw_relative_disk(f);
    r.restriction_image = restriction_image_disk(f);
    return r;
}

SphereMW mw_sphere(const FibrationDescription& f) {
    require_valid_sphere(f);
    const CycleTuple& t = f.cycles;
    IntegerMatrix k = kernel_saturated(eval_matrix(t));
    IntegerMatrix b = coboundary_matrix(t);
    IntegerMatrix rel(k.cols(), 2);
    for (std::size_t j = 0; j < 2; ++j) {
        auto y = solve_exact(k, b.column(j));
        if (!y) throw Error("internal", "coboundary outside the cocycle kernel");
        rel.set_column(j, *y);
    }
    SphereMW out;
    out.group = cokernel(rel);
    out.lattice_label = classify_even_unimodular_indefinite(minus_two_model(f.genus()));
    return out;
}

FibrationDescription fiber_connected_sum(const FibrationDescription& f,
                                         const FibrationDescription& g) {
    require_valid_sphere(f);
    require_valid_sphere(g);
    FibrationDescription out;
    out.base = BaseSurface::sphere;
    out.cycles = f.cycles;
    out.cycles.insert(out.cycles.end(), g.cycles.begin(), g.cycles.end());
    return out;
}

FibrationDescription standard_sphere(std::size_t d) {
    FibrationDescription f;
    f.base = BaseSurface::sphere;
    for (std::size_t i = 0; i < 6 * d; ++i) {
        f.cycles.push_back({1, 0});
        f.cycles.push_back({0, 1});
    }
    return f;
}

RationalElliptic rational_elliptic_mw() {
    RationalElliptic r;
    r.lambda1 = make_standard("I(+1) + 9I(-1)");
    r.lambda1.basis_labels = {"l", "e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
    r.e.assign(10, -1);
    r.e[0] = 3;
    r.lambda1.marked_e = r.e;

    r.quotient = isotropic_quotient(r.lambda1, r.e);

    auto cls = [&](std::initializer_list<long> v) {
        LatticeVector x;
        for (long c : v) x.push_back(c);
        return x;
    };
    r.basis_ambient = {
        cls({1, 0, -1, -1, -1, 0, 0, 0, 0, 0}), // l - e1 - e2 - e3
        cls({0, 0, 1, -1, 0, 0, 0, 0, 0, 0}),   // e1 - e2
        cls({0, 0, 0, 1, -1, 0, 0, 0, 0, 0}),
        cls({0, 0, 0, 0, 1, -1, 0, 0, 0, 0}),
        cls({0, 0, 0, 0, 0, 1, -1, 0, 0, 0}),
        cls({0, 0, 0, 0, 0, 0, 1, -1, 0, 0}),
        cls({0, 0, 0, 0, 0, 0, 0, 1, -1, 0}),
        cls({0, 0, 0, 0, 0, 0, 0, 0, 1, -1}), // e7 - e8
    };
    for (const auto& v : r.basis_ambient) r.basis.push_back(quotient_coords(r.quotient, v));
    return r;
}

} // namespace mwlat
