#include "mwlat/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace mwlat {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("shape", "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntegerMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntegerMatrix IntegerMatrix::pow(std::size_t k) const {
    if (rows_ != cols_) throw Error("shape", "pow needs a square matrix");
    IntegerMatrix result = identity(rows_);
    IntegerMatrix base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw Error("shape", "determinant needs a square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntegerMatrix w = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

Int IntegerMatrix::trace() const {
    if (rows_ != cols_) throw Error("shape", "trace needs a square matrix");
    Int t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<Int> IntegerMatrix::column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntegerMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntegerMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    if (v.size() != rows_) throw Error("shape", "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("shape", "matrix product shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape", "matrix sum shape mismatch");
    IntegerMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("shape", "matrix difference shape mismatch");
    IntegerMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a) {
    IntegerMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = -a.a_[i];
    return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Int> mat_vec(const IntegerMatrix& m, const std::vector<Int>& v) {
    if (m.cols() != v.size()) throw Error("shape", "matrix-vector shape mismatch");
    std::vector<Int> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw Error("shape", "hstack row mismatch");
    IntegerMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) throw Error("shape", "vstack column mismatch");
    IntegerMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
    }
    return c;
}

IntegerMatrix column_matrix(const std::vector<Int>& v) {
    IntegerMatrix c(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c.at(i, 0) = v[i];
    return c;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0, n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = d.at(i, i);
    return v;
}

Int FgAbelianGroup::torsion_order() const {
    Int o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

std::string FgAbelianGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) { os << "Z"; first = false; }
    else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Smallest |nonzero| entry of D(s:, s:), ties by leftmost column then
// topmost row. Returns false when the submatrix is zero.
bool find_pivot(const IntegerMatrix& d, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t j = s; j < d.cols(); ++j)
        for (std::size_t i = s; i < d.rows(); ++i) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithDecomposition s;
    s.u = IntegerMatrix::identity(m.rows());
    s.v = IntegerMatrix::identity(m.cols());
    s.d = m;
    IntegerMatrix& d = s.d;
    std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pi, pj;
            if (!find_pivot(d, k, pi, pj)) break;
            swap_rows(d, k, pi);
            swap_rows(s.u, k, pi);
            swap_cols(d, k, pj);
            swap_cols(s.v, k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = d.at(i, k) / d.at(k, k);
                add_row(d, i, k, -q);
                add_row(s.u, i, k, -q);
                if (d.at(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = d.at(k, j) / d.at(k, k);
                add_col(d, j, k, -q);
                add_col(s.v, j, k, -q);
                if (d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot now lone in its row and column; enforce divisibility
            // into the remaining block.
            bool divides = true;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = k + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = k + 1; j < d.cols() && divides; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        divides = false;
                        bi = i;
                        bj = j;
                    }
            if (divides) break;
            add_row(d, k, bi, 1);
            add_row(s.u, k, bi, 1);
            (void)bj;
        }
        if (d.at(k, k) < 0) {
            negate_row(d, k);
            negate_row(s.u, k);
        }
    }
    return s;
}

FgAbelianGroup cokernel(const IntegerMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    FgAbelianGroup g;
    std::size_t n = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = s.d.at(i, i);
        if (di == 0) continue;
        ++rank;
        if (di >= 2) g.torsion.push_back(di);
    }
    g.free_rank = m.rows() - rank;
    return g;
}

IntegerMatrix kernel_saturated(const IntegerMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::size_t n = std::min(m.rows(), m.cols());
    std::vector<std::size_t> zero_cols;
    for (std::size_t i = 0; i < n; ++i)
        if (s.d.at(i, i) == 0) zero_cols.push_back(i);
    for (std::size_t j = n; j < m.cols(); ++j) zero_cols.push_back(j);

    IntegerMatrix k(m.cols(), zero_cols.size());
    for (std::size_t c = 0; c < zero_cols.size(); ++c)
        k.set_column(c, s.v.column(zero_cols[c]));
    // Canonicalize: the columns of V are one kernel basis; replace by the
    // Hermite basis of the same sublattice.
    return hnf_rows(k.transpose()).transpose();
}

bool groups_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) {
    return g.free_rank == h.free_rank && g.torsion == h.torsion;
}

IntegerMatrix hnf_rows(const IntegerMatrix& m) {
    IntegerMatrix w = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        // Reduce column c below row r to a single entry by gcd steps.
        for (;;) {
            std::size_t best = w.rows();
            for (std::size_t i = r; i < w.rows(); ++i) {
                if (w.at(i, c) == 0) continue;
                if (best == w.rows() || abs(w.at(i, c)) < abs(w.at(best, c))) best = i;
            }
            if (best == w.rows()) break; // column zero from r down
            swap_rows(w, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < w.rows(); ++i) {
                if (w.at(i, c) == 0) continue;
                Int q = w.at(i, c) / w.at(r, c);
                add_row(w, i, r, -q);
                if (w.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < w.rows() && w.at(r, c) != 0) {
            if (w.at(r, c) < 0) negate_row(w, r);
            for (std::size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(r, c).get_mpz_t());
                add_row(w, i, r, -q);
            }
            ++r;
        }
    }
    IntegerMatrix out(r, w.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
    return out;
}

IntegerMatrix column_basis(const IntegerMatrix& gens) {
    return hnf_rows(gens.transpose()).transpose();
}

std::optional<std::vector<Int>> solve_exact(const IntegerMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw Error("shape", "solve shape mismatch");
    SmithDecomposition s = smith_normal_form(a);
    std::vector<Int> ub = mat_vec(s.u, b);
    std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < n && s.d.at(i, i) != 0) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(s.v, y);
}

FgAbelianGroup subquotient(const IntegerMatrix& num_gens, const IntegerMatrix& den_gens) {
    if (num_gens.rows() != den_gens.rows()) throw Error("shape", "subquotient ambient mismatch");
    IntegerMatrix basis = column_basis(hstack(num_gens, den_gens));
    if (basis.cols() == 0) return FgAbelianGroup{};
    IntegerMatrix rel(basis.cols(), den_gens.cols());
    for (std::size_t j = 0; j < den_gens.cols(); ++j) {
        auto x = solve_exact(basis, den_gens.column(j));
        if (!x) throw Error("internal", "denominator not inside numerator span");
        rel.set_column(j, *x);
    }
    return cokernel(rel);
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

bool is_zero_vector(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace mwlat
