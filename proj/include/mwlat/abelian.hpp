#ifndef MWLAT_ABELIAN_HPP
#define MWLAT_ABELIAN_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mwlat {

using Int = mpz_class;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

// Dense exact integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;

    IntegerMatrix pow(std::size_t k) const; // square matrices
    Int determinant() const;                // Bareiss, exact
    Int trace() const;

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> mat_vec(const IntegerMatrix& m, const std::vector<Int>& v);
IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix column_matrix(const std::vector<Int>& v);

struct SmithDecomposition {
    IntegerMatrix u; // unimodular, rows x rows
    IntegerMatrix d; // diagonal, d1 | d2 | ..., entries >= 0
    IntegerMatrix v; // unimodular, cols x cols
    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion; // invariant factors, each >= 2, d_i | d_{i+1}

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // order of the torsion subgroup
    Int torsion_order() const;
    std::string to_string() const;
};

// U*M*V = D with the documented pivot rule (smallest |nonzero| pivot,
// leftmost column then topmost row as tiebreak), so output is deterministic.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Z^rows / (column span of M).
FgAbelianGroup cokernel(const IntegerMatrix& m);

// Columns form a canonical (Hermite-reduced) basis of the saturation of
// ker(M) in Z^cols; the quotient by the returned sublattice is torsion-free.
IntegerMatrix kernel_saturated(const IntegerMatrix& m);

bool groups_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);

// Canonical row Hermite form of the row span (zero rows dropped):
// pivot columns strictly increasing, pivots positive, entries above
// each pivot reduced into [0, pivot).
IntegerMatrix hnf_rows(const IntegerMatrix& m);

// Canonical basis (as columns) of the column span of `gens`.
IntegerMatrix column_basis(const IntegerMatrix& gens);

// Solve A x = b over the integers; nullopt when no integral solution.
std::optional<std::vector<Int>> solve_exact(const IntegerMatrix& a, const std::vector<Int>& b);

// (span(num) + span(den)) / span(den), both given by generator columns in
// the same ambient Z^m.
FgAbelianGroup subquotient(const IntegerMatrix& num_gens, const IntegerMatrix& den_gens);

Int content(const std::vector<Int>& v); // gcd of entries, 0 for the zero vector
bool is_zero_vector(const std::vector<Int>& v);

} // namespace mwlat

#endif
