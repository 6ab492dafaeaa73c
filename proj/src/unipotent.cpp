#include "mwlat/unipotent.hpp"

#include <cstdlib>

namespace mwlat {

namespace {

// Unimodular change of basis of Z^r whose first columns span the radical of
// the restricted form. Radical vectors are isotropic, so fronting them makes
// the canonical enumeration hit an isotropic candidate as early as possible.
IntegerMatrix radical_first_basis(const IntegerMatrix& gram_restricted) {
    std::size_t r = gram_restricted.rows();
    IntegerMatrix radical = kernel_saturated(gram_restricted); // r x s, s may be 0
    if (radical.cols() == 0) return IntegerMatrix::identity(r);
    SmithDecomposition s = smith_normal_form(radical);
    // radical is saturated, so the diagonal is all ones and the first s
    // columns of u^{-1} span the same sublattice as radical itself.
    SmithDecomposition su = smith_normal_form(s.u);
    IntegerMatrix uinv = su.v * su.u; // u^{-1} since u is unimodular
    return uinv;
}

// Candidate coefficient vectors in canonical order: sup-norm shell
// ascending, then support size, then support set lexicographically, then
// value tuples with magnitude-then-sign ordering per slot. Returns true if
// the visitor stops the enumeration.
template <typename Visit>
bool enumerate_coefficients(std::size_t r, unsigned long bound, Visit visit) {
    std::vector<long> values;
    for (unsigned long shell = 1; shell <= bound; ++shell) {
        values.clear();
        for (unsigned long a = 1; a <= shell; ++a) {
            values.push_back(static_cast<long>(a));
            values.push_back(-static_cast<long>(a));
        }
        for (std::size_t support = 1; support <= r; ++support) {
            std::vector<std::size_t> idx(support);
            for (std::size_t i = 0; i < support; ++i) idx[i] = i;
            while (true) {
                std::vector<std::size_t> slot(support, 0);
                while (true) {
                    bool on_shell = false;
                    for (std::size_t i = 0; i < support; ++i)
                        if (static_cast<unsigned long>(std::abs(values[slot[i]])) == shell) on_shell = true;
                    if (on_shell) {
                        std::vector<Int> x(r, 0);
                        for (std::size_t i = 0; i < support; ++i) x[idx[i]] = values[slot[i]];
                        if (visit(x)) return true;
                    }
                    std::size_t j = support;
                    while (j-- > 0) {
                        if (++slot[j] < values.size()) break;
                        slot[j] = 0;
                        if (j == 0) goto next_support_set;
                    }
                }
            next_support_set:
                std::size_t j = support;
                bool advanced = false;
                while (j-- > 0) {
                    if (idx[j] + (support - j) < r) {
                        ++idx[j];
                        for (std::size_t i = j + 1; i < support; ++i) idx[i] = idx[i - 1] + 1;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
    }
    return false;
}

} // namespace

std::optional<UnipotentCertificate> is_unipotent(const Isometry& g) {
    std::size_t n = g.matrix.rows();
    IntegerMatrix nilpart = g.matrix - IntegerMatrix::identity(n);
    IntegerMatrix power = IntegerMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (power.is_zero())
            return UnipotentCertificate{k, kernel_saturated(nilpart)};
        power = power * nilpart;
    }
    return std::nullopt;
}

bool fixed_rank_bound_check(const Isometry& g, std::size_t d) {
    auto cert = is_unipotent(g);
    if (!cert) throw Error("unipotent", "isometry is not unipotent");
    return cert->fixed_lattice.cols() >= 4 * d + 2;
}

bool verify_isotropic_fixed(const Lattice& l, const Isometry& g, const LatticeVector& v) {
    if (v.size() != l.rank()) return false;
    if (is_zero_vector(v)) return false;
    if (mat_vec(g.matrix, v) != v) return false;
    if (inner(l, v, v) != 0) return false;
    return content(v) == 1;
}

std::optional<LatticeVector> find_primitive_isotropic_fixed(const Lattice& l, const Isometry& g,
                                                            unsigned long bound) {
    auto cert = is_unipotent(g);
    if (!cert) throw Error("unipotent", "isometry is not unipotent");
    const IntegerMatrix& fixed = cert->fixed_lattice;
    std::size_t r = fixed.cols();
    if (r == 0) return std::nullopt;

    IntegerMatrix gram_restricted = fixed.transpose() * (l.gram * fixed);
    IntegerMatrix basis = fixed * radical_first_basis(gram_restricted);

    std::optional<LatticeVector> hit;
    enumerate_coefficients(r, bound, [&](const std::vector<Int>& x) {
        LatticeVector v = mat_vec(basis, x);
        if (inner(l, v, v) != 0 || content(v) != 1) return false;
        hit = v;
        return true;
    });
    return hit;
}

} // namespace mwlat
