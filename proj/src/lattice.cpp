#include "mwlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mwlat {

namespace {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat rat_pair(const IntegerMatrix& g, const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) row += Rat(g.at(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

RatVec to_rat(const LatticeVector& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

struct CongruenceDiag {
    std::vector<RatVec> basis; // pairwise orthogonal rational vectors
    std::vector<Rat> diag;     // their self-pairings
};

// Symmetric Gaussian elimination over Q: returns an orthogonal rational
// basis together with the self-pairings, whose sign pattern is the
// signature (zeros = radical).
CongruenceDiag congruence_diagonalize(const IntegerMatrix& g) {
    std::size_t n = g.rows();
    std::vector<RatVec> s(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = Rat(g.at(i, j));
    std::vector<RatVec> basis(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

    auto add_vec = [&](std::size_t dst, std::size_t src, const Rat& f) {
        if (f == 0) return;
        for (std::size_t t = 0; t < n; ++t) basis[dst][t] += f * basis[src][t];
        for (std::size_t t = 0; t < n; ++t) s[dst][t] += f * s[src][t];
        for (std::size_t t = 0; t < n; ++t) s[t][dst] += f * s[t][src];
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (s[k][k] == 0) {
            std::size_t nz_diag = n, nz_off = n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (nz_diag == n && s[j][j] != 0) nz_diag = j;
                if (nz_off == n && s[k][j] != 0) nz_off = j;
            }
            if (nz_diag < n) {
                std::swap(basis[k], basis[nz_diag]);
                std::swap(s[k], s[nz_diag]);
                for (std::size_t t = 0; t < n; ++t) std::swap(s[t][k], s[t][nz_diag]);
            } else if (nz_off < n) {
                add_vec(k, nz_off, Rat(1)); // diagonal becomes 2*s[k][j] != 0
            } else {
                continue; // radical direction, row already zero
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s[i][k] == 0) continue;
            Rat f = -s[i][k] / s[k][k];
            add_vec(i, k, f);
        }
    }
    CongruenceDiag out;
    out.basis = std::move(basis);
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.diag[i] = s[i][i];
        out.diag[i].canonicalize();
    }
    return out;
}

int rational_det_sign(std::vector<RatVec> m) {
    std::size_t n = m.size();
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        if (m[k][k] < 0) sign = -sign;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return sign;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    if (!s.d.is_identity()) throw Error("precondition", "matrix is not unimodular");
    return s.v * s.u;
}

IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntegerMatrix g(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) g.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return g;
}

IntegerMatrix gram_u() { return IntegerMatrix::from_rows({{0, 1}, {1, 0}}); }

IntegerMatrix gram_e8_minus() {
    IntegerMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = -2;
    const std::pair<int, int> edges[] = {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (auto [a, b] : edges) {
        g.at(a, b) = 1;
        g.at(b, a) = 1;
    }
    return g;
}

IntegerMatrix gram_a2_minus() { return IntegerMatrix::from_rows({{-2, 1}, {1, -2}}); }

IntegerMatrix gram_i(int sign) {
    IntegerMatrix g(1, 1);
    g.at(0, 0) = sign;
    return g;
}

struct Term {
    std::size_t copies;
    std::string atom;
    long lambda_d = 0;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Term parse_term(const std::string& raw) {
    std::string t = strip(raw);
    if (t.empty()) throw Error("parse", "empty term in construction expression");
    Term out;
    out.copies = 1;
    std::size_t i = 0;
    if (isdigit(static_cast<unsigned char>(t[0]))) {
        std::size_t j = 0;
        while (j < t.size() && isdigit(static_cast<unsigned char>(t[j]))) ++j;
        out.copies = std::stoul(t.substr(0, j));
        i = j;
    }
    std::string atom = strip(t.substr(i));
    if (atom == "U" || atom == "I(+1)" || atom == "I(-1)" || atom == "E8(-1)" || atom == "A2(-1)") {
        out.atom = atom;
        return out;
    }
    if (atom.rfind("Lambda(", 0) == 0 && atom.back() == ')') {
        std::string num = atom.substr(7, atom.size() - 8);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw Error("parse", "malformed Lambda argument: " + atom);
        out.atom = "Lambda";
        out.lambda_d = std::stol(num);
        if (out.lambda_d < 1) throw Error("parse", "Lambda(d) needs d >= 1");
        return out;
    }
    throw Error("parse", "unknown construction atom: " + atom);
}

Lattice build_lambda(std::size_t d);

} // namespace

Int inner(const Lattice& l, const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != l.rank() || b.size() != l.rank())
        throw Error("shape", "vector length does not match lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += a[i] * l.gram.at(i, j) * b[j];
    }
    return s;
}

Int norm_of(const Lattice& l, const LatticeVector& v) { return inner(l, v, v); }

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

Lattice make_lattice(IntegerMatrix gram) {
    if (!gram.is_symmetric()) throw Error("precondition", "Gram matrix is not symmetric");
    Lattice l;
    l.gram = std::move(gram);
    return l;
}

namespace {

Lattice build_lambda(std::size_t d) {
    std::vector<IntegerMatrix> blocks;
    LatticeVector e;
    if (d % 2 == 0) {
        blocks.push_back(gram_u());
        for (std::size_t i = 0; i < d; ++i) blocks.push_back(gram_e8_minus());
        for (std::size_t i = 0; i + 2 < 2 * d; ++i) blocks.push_back(gram_u());
        Lattice l = make_lattice(block_diagonal(blocks));
        e.assign(l.rank(), 0);
        e[0] = 1; // first isotropic vector of the leading U
        l.marked_e = e;
        return l;
    }
    blocks.push_back(gram_i(+1));
    blocks.push_back(gram_i(-1));
    for (std::size_t i = 0; i < d; ++i) blocks.push_back(gram_e8_minus());
    for (std::size_t i = 0; i + 2 < 2 * d; ++i) blocks.push_back(gram_u());
    Lattice l = make_lattice(block_diagonal(blocks));
    e.assign(l.rank(), 0);
    e[0] = 1;
    e[1] = -1; // difference of the two unit vectors
    l.marked_e = e;
    return l;
}

} // namespace

Lattice make_standard(const std::string& expr) {
    // split on '+' outside parentheses
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : expr) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (depth != 0) throw Error("parse", "unbalanced parentheses in construction expression");

    std::vector<IntegerMatrix> blocks;
    std::size_t offset = 0;
    std::vector<std::pair<std::size_t, Lattice>> lambda_blocks; // offset, lattice
    for (const auto& p : parts) {
        Term t = parse_term(p);
        for (std::size_t c = 0; c < t.copies; ++c) {
            IntegerMatrix g;
            if (t.atom == "U") g = gram_u();
            else if (t.atom == "I(+1)") g = gram_i(+1);
            else if (t.atom == "I(-1)") g = gram_i(-1);
            else if (t.atom == "E8(-1)") g = gram_e8_minus();
            else if (t.atom == "A2(-1)") g = gram_a2_minus();
            else {
                Lattice lam = build_lambda(static_cast<std::size_t>(t.lambda_d));
                lambda_blocks.emplace_back(offset, lam);
                g = lam.gram;
            }
            offset += g.rows();
            blocks.push_back(std::move(g));
        }
    }
    if (blocks.empty()) throw Error("parse", "empty construction expression");
    Lattice l = make_lattice(block_diagonal(blocks));
    if (!lambda_blocks.empty()) {
        // first Lambda block's marked vector, padded across the sum
        LatticeVector e(l.rank(), 0);
        auto& [off, lam] = lambda_blocks.front();
        const LatticeVector& le = *lam.marked_e;
        for (std::size_t i = 0; i < le.size(); ++i) e[off + i] = le[i];
        l.marked_e = e;
    }
    return l;
}

std::size_t radical_rank(const Lattice& l) {
    CongruenceDiag cd = congruence_diagonalize(l.gram);
    std::size_t z = 0;
    for (const auto& d : cd.diag)
        if (d == 0) ++z;
    return z;
}

Signature signature(const Lattice& l) {
    CongruenceDiag cd = congruence_diagonalize(l.gram);
    Signature s;
    std::size_t z = 0;
    for (const auto& d : cd.diag) {
        if (d > 0) ++s.positive;
        else if (d < 0) ++s.negative;
        else ++z;
    }
    if (z > 0) {
        std::ostringstream os;
        os << "degenerate Gram matrix (radical rank " << z << ")";
        throw Error("degenerate", os.str());
    }
    return s;
}

bool is_even(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram.at(i, i) % 2 != 0) return false;
    return true;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    if (l.gram.determinant() == 0) throw Error("degenerate", "degenerate Gram matrix");
    return DiscriminantGroup{cokernel(l.gram)};
}

IsotropicQuotient isotropic_quotient(const Lattice& l, const LatticeVector& e) {
    std::size_t n = l.rank();
    if (e.size() != n) throw Error("shape", "vector length does not match lattice rank");
    if (is_zero_vector(e)) throw Error("precondition", "e must be nonzero");
    if (!is_primitive(e)) throw Error("precondition", "e is not primitive");
    if (norm_of(l, e) != 0) throw Error("precondition", "e is not isotropic");

    std::vector<Int> ge = mat_vec(l.gram, e);
    if (is_zero_vector(ge)) throw Error("degenerate", "e lies in the radical");
    IntegerMatrix pairing_row(1, n);
    for (std::size_t j = 0; j < n; ++j) pairing_row.at(0, j) = ge[j];

    IntegerMatrix perp = kernel_saturated(pairing_row); // n x (n-1)
    auto y = solve_exact(perp, e);
    if (!y) throw Error("internal", "e not contained in its own orthogonal complement");

    // unimodular W with W y = (1, 0, ..., 0)
    SmithDecomposition s = smith_normal_form(column_matrix(*y));
    if (s.d.at(0, 0) != 1) throw Error("internal", "marked vector not primitive in e-perp");
    IntegerMatrix w = s.u;
    if (mat_vec(w, *y)[0] < 0)
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(0, j) = -w.at(0, j);
    IntegerMatrix winv = inverse_unimodular(w);

    std::size_t m = n >= 2 ? n - 2 : 0;
    IntegerMatrix lift(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Int> amb = mat_vec(perp, winv.column(j + 1));
        lift.set_column(j, amb);
    }
    IntegerMatrix project(m, n - 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) project.at(i, j) = w.at(i + 1, j);

    IsotropicQuotient out;
    out.perp_basis = perp;
    out.lift = lift;
    out.project = project;
    out.quotient = make_lattice(lift.transpose() * (l.gram * lift));
    return out;
}

LatticeVector quotient_coords(const IsotropicQuotient& q, const LatticeVector& ambient) {
    auto y = solve_exact(q.perp_basis, ambient);
    if (!y) throw Error("precondition", "vector is not orthogonal to e");
    return mat_vec(q.project, *y);
}

Isometry make_isometry(const Lattice& l, IntegerMatrix m) {
    if (m.rows() != l.rank() || m.cols() != l.rank())
        throw Error("shape", "isometry size does not match lattice rank");
    if (!(m.transpose() * (l.gram * m) == l.gram))
        throw Error("isometry", "matrix does not preserve the Gram matrix");
    Int det = m.determinant();
    if (det != 1 && det != -1) throw Error("isometry", "matrix is not invertible over Z");
    return Isometry{std::move(m)};
}

Isometry eichler(const Lattice& l, const LatticeVector& e, const LatticeVector& c_lift) {
    std::size_t n = l.rank();
    if (is_zero_vector(e) || !is_primitive(e)) throw Error("precondition", "e must be primitive");
    if (norm_of(l, e) != 0) throw Error("precondition", "e is not isotropic");
    if (inner(l, e, c_lift) != 0) throw Error("precondition", "c_lift is not orthogonal to e");
    Int cc = norm_of(l, c_lift);
    if (cc % 2 != 0) throw Error("parity", "c_lift has odd self-pairing");
    Int half_cc = cc / 2;

    IntegerMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector x(n, 0);
        x[j] = 1;
        Int xe = inner(l, x, e);
        Int xc = inner(l, x, c_lift);
        LatticeVector img = x;
        for (std::size_t i = 0; i < n; ++i)
            img[i] += xe * c_lift[i] - xc * e[i] - half_cc * xe * e[i];
        m.set_column(j, img);
    }
    return make_isometry(l, std::move(m));
}

Isometry reflection(const Lattice& l, const LatticeVector& c) {
    if (norm_of(l, c) != -2) throw Error("precondition", "reflection vector must have self-pairing -2");
    std::size_t n = l.rank();
    IntegerMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector x(n, 0);
        x[j] = 1;
        Int cx = inner(l, c, x);
        LatticeVector img = x;
        for (std::size_t i = 0; i < n; ++i) img[i] += cx * c[i];
        m.set_column(j, img);
    }
    return make_isometry(l, std::move(m));
}

int spinor_orientation_sign(const Lattice& l, const Isometry& g) {
    CongruenceDiag cd = congruence_diagonalize(l.gram);
    std::vector<RatVec> pos;
    for (std::size_t i = 0; i < cd.diag.size(); ++i)
        if (cd.diag[i] > 0) pos.push_back(cd.basis[i]);
    if (pos.empty()) throw Error("precondition", "lattice has no positive directions");

    std::size_t p = pos.size();
    std::vector<RatVec> t(p, RatVec(p));
    for (std::size_t j = 0; j < p; ++j) {
        RatVec gp(l.rank(), Rat(0));
        for (std::size_t i = 0; i < l.rank(); ++i)
            for (std::size_t k = 0; k < l.rank(); ++k)
                gp[i] += Rat(g.matrix.at(i, k)) * pos[j][k];
        for (std::size_t i = 0; i < p; ++i)
            t[i][j] = rat_pair(l.gram, gp, pos[i]) / rat_pair(l.gram, pos[i], pos[i]);
    }
    int sign = rational_det_sign(std::move(t));
    if (sign == 0) throw Error("internal", "projection to the positive subspace degenerated");
    return sign;
}

namespace {

// floor and ceil of (a - m)/s and (-a - ... helpers via mpz fdiv/cdiv
Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void enumerate_level(const std::vector<std::vector<Rat>>& u, const std::vector<Rat>& d,
                     std::size_t level, Rat rem, std::vector<Int>& x,
                     std::vector<LatticeVector>& out) {
    // quadratic form written as sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
    std::size_t n = d.size();
    std::size_t i = n - 1 - level;
    Rat s = 0;
    for (std::size_t j = i + 1; j < n; ++j)
        if (x[j] != 0) s += u[i][j] * Rat(x[j]);

    // integer range for d_i (x_i + s)^2 <= rem
    Rat rho = rem / d[i];
    rho.canonicalize();
    Rat sc = s;
    sc.canonicalize();
    Int p = rho.get_num(), q = rho.get_den();
    Int sn = sc.get_num(), sd = sc.get_den();
    // (x*sd + sn)^2 <= p*sd^2/q  <=>  m^2 <= floor(p*sd^2/q)
    Int bound = floor_div(p * sd * sd, q);
    if (bound < 0) return;
    Int m_max;
    mpz_sqrt(m_max.get_mpz_t(), bound.get_mpz_t());
    Int lo = ceil_div(-m_max - sn, sd);
    Int hi = floor_div(m_max - sn, sd);

    for (Int xi = lo; xi <= hi; ++xi) {
        x[i] = xi;
        Rat term = Rat(xi) + s;
        Rat used = d[i] * term * term;
        Rat next = rem - used;
        if (next < 0) continue;
        if (i == 0) {
            if (next == 0) {
                LatticeVector v(n);
                bool nonzero = false;
                for (std::size_t t = 0; t < n; ++t) {
                    v[t] = x[t];
                    if (x[t] != 0) nonzero = true;
                }
                if (nonzero) out.push_back(std::move(v));
            }
        } else {
            enumerate_level(u, d, level + 1, next, x, out);
        }
    }
    x[i] = 0;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

std::vector<LatticeVector> roots(const Lattice& l, const Int& norm) {
    if (norm >= 0) throw Error("precondition", "root norm must be negative");
    Signature sig;
    try {
        sig = signature(l);
    } catch (const Error&) {
        throw Error("precondition", "root enumeration needs a definite lattice");
    }
    if (sig.positive != 0) throw Error("precondition", "root enumeration needs a negative-definite lattice");

    std::size_t n = l.rank();
    // positive-definite form -G, decomposed by completion of squares
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = Rat(-l.gram.at(i, j));
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = s[i][i];
        if (d[i] <= 0) throw Error("internal", "completion of squares hit a nonpositive pivot");
        for (std::size_t j = i + 1; j < n; ++j) u[i][j] = s[i][j] / d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) s[j][k] -= u[i][j] * u[i][k] * d[i];
    }

    std::vector<LatticeVector> out;
    std::vector<Int> x(n, 0);
    enumerate_level(u, d, 0, Rat(-norm), x, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool has_e8_dynkin_graph(const Lattice& l, const std::vector<LatticeVector>& root_list) {
    std::set<std::vector<Int>> positives;
    for (const auto& r : root_list) {
        for (const auto& c : r) {
            if (c == 0) continue;
            if (c > 0) positives.insert(r);
            break;
        }
    }
    std::vector<LatticeVector> simple;
    for (const auto& r : positives) {
        bool decomposable = false;
        for (const auto& a : positives) {
            LatticeVector diff(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - a[i];
            if (is_zero_vector(diff)) continue;
            if (positives.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    if (simple.size() != 8) return false;

    std::vector<std::vector<std::size_t>> adj(8);
    for (std::size_t i = 0; i < 8; ++i) {
        if (norm_of(l, simple[i]) != -2) return false;
        for (std::size_t j = i + 1; j < 8; ++j) {
            Int p = inner(l, simple[i], simple[j]);
            if (p != 0 && p != 1) return false;
            if (p == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<std::size_t> degs;
    for (const auto& a : adj) degs.push_back(a.size());
    std::vector<std::size_t> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 2, 3}) return false;

    std::size_t center = 0;
    while (degs[center] != 3) ++center;
    std::vector<std::size_t> branch_lengths;
    for (std::size_t start : adj[center]) {
        std::size_t len = 0, prev = center, cur = start;
        for (;;) {
            ++len;
            std::size_t next = 9;
            for (std::size_t nb : adj[cur]) {
                if (nb == prev) continue;
                if (next != 9) return false; // branch is not a path
                next = nb;
            }
            if (next == 9) break;
            prev = cur;
            cur = next;
        }
        branch_lengths.push_back(len);
    }
    std::sort(branch_lengths.begin(), branch_lengths.end());
    return branch_lengths == std::vector<std::size_t>{1, 2, 4};
}

namespace {

std::string format_label(std::size_t e8_copies, int e8_sign, std::size_t u_copies) {
    std::ostringstream os;
    if (e8_copies > 0) {
        if (e8_copies > 1) os << e8_copies;
        os << (e8_sign < 0 ? "E8(-1)" : "E8(+1)");
    }
    if (u_copies > 0) {
        if (e8_copies > 0) os << " + ";
        if (u_copies > 1) os << u_copies;
        os << "U";
    }
    return os.str();
}

} // namespace

std::string classify_even_unimodular_indefinite(const Lattice& l) {
    if (!is_even(l)) throw Error("precondition", "lattice is not even");
    Int det = l.gram.determinant();
    if (det != 1 && det != -1) throw Error("precondition", "lattice is not unimodular");
    Signature sig = signature(l);

    if (sig.positive > 0 && sig.negative > 0) {
        if (sig.positive <= sig.negative) {
            std::size_t diff = sig.negative - sig.positive;
            if (diff % 8 != 0) throw Error("internal", "even unimodular signature not divisible by 8");
            return format_label(diff / 8, -1, sig.positive);
        }
        std::size_t diff = sig.positive - sig.negative;
        if (diff % 8 != 0) throw Error("internal", "even unimodular signature not divisible by 8");
        return format_label(diff / 8, +1, sig.negative);
    }

    if (sig.positive == 0 && sig.negative == 8) {
        auto rs = roots(l, Int(-2));
        if (rs.size() == 240 && has_e8_dynkin_graph(l, rs)) return "E8(-1)";
        throw Error("classify", "definite rank-8 lattice failed the E8 certificate");
    }
    throw Error("precondition", "definite classification implemented only in rank 8");
}

Lattice minus_two_model(std::size_t d) {
    if (d < 1) throw Error("precondition", "d must be >= 1");
    std::vector<IntegerMatrix> blocks;
    for (std::size_t i = 0; i < d; ++i) blocks.push_back(gram_e8_minus());
    for (std::size_t i = 0; i + 2 < 2 * d; ++i) blocks.push_back(gram_u());
    return make_lattice(block_diagonal(blocks));
}

std::vector<LatticeVector> minus_two_basis(std::size_t d) {
    if (d < 1) throw Error("precondition", "d must be >= 1");
    std::size_t n = 12 * d - 4;
    std::vector<LatticeVector> out;
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < 8; ++i) {
            LatticeVector v(n, 0);
            v[8 * b + i] = 1;
            out.push_back(v);
        }
    // each pair of U blocks rides on a root from the matching E8 block
    for (std::size_t p = 0; p + 1 < d; ++p) {
        std::size_t alpha = 8 * p;
        std::size_t u1 = 8 * d + 4 * p, u2 = u1 + 2;
        for (std::size_t iso : {u1, u1 + 1, u2, u2 + 1}) {
            LatticeVector v(n, 0);
            v[alpha] = 1;
            v[iso] = 1;
            out.push_back(v);
        }
    }
    return out;
}

} // namespace mwlat
