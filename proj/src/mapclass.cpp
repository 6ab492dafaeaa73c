#include "mwlat/mapclass.hpp"

#include <sstream>

namespace mwlat {

namespace {

bool odd(const Int& k) { return k % 2 != 0; }

// Nilpotent part shared by the relative actions of F and of the
// half-translation: both are unipotent with square-zero offset.
IntegerMatrix rel_nilpotent() {
    return IntegerMatrix::from_rows({{-1, -1}, {1, 1}});
}

IntegerMatrix rel_action_t() {
    return IntegerMatrix::from_rows({{1, 2}, {0, -1}});
}

IntegerMatrix variation_t() {
    return IntegerMatrix::from_rows({{0, 0}, {0, -1}});
}

IntegerMatrix variation_f() {
    return IntegerMatrix::from_rows({{1, 2}, {1, 1}});
}

IntegerMatrix scale(const IntegerMatrix& a, const Int& s) {
    IntegerMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
    return out;
}

// F^m acts on relative classes by I + 2m N with N the nilpotent above;
// exact for every integer m since N^2 = 0.
IntegerMatrix rel_action_f_power(const Int& m) {
    return IntegerMatrix::identity(2) + scale(rel_nilpotent(), 2 * m);
}

// Cocycle sum over the F-letters telescopes to a polynomial in m:
// var(F^m) = m V_F + m(m-1) V_F N.
IntegerMatrix variation_f_power(const Int& m) {
    IntegerMatrix vf = variation_f();
    return scale(vf, m) + scale(vf * rel_nilpotent(), m * (m - 1));
}

} // namespace

bool operator==(const ModPiWord& a, const ModPiWord& b) { return a.m == b.m && a.k == b.k; }
bool operator!=(const ModPiWord& a, const ModPiWord& b) { return !(a == b); }

ModPiWord mp_identity() { return {0, 0}; }
ModPiWord mp_f() { return {1, 0}; }
ModPiWord mp_t() { return {0, 1}; }
ModPiWord mp_f_inverse() { return {-1, 0}; }
ModPiWord mp_t_inverse() { return {0, -1}; }
ModPiWord tau_c1() { return {1, 1}; }

ModPiWord mp_multiply(const ModPiWord& a, const ModPiWord& b) {
    Int m = a.m + (odd(a.k) ? -b.m : b.m);
    return {m, a.k + b.k};
}

ModPiWord mp_inverse(const ModPiWord& w) {
    Int m = odd(w.k) ? w.m : -w.m;
    return {m, -w.k};
}

ModPiWord mp_power(const ModPiWord& w, long n) {
    ModPiWord base = n < 0 ? mp_inverse(w) : w;
    unsigned long reps = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    ModPiWord out = mp_identity();
    for (unsigned long i = 0; i < reps; ++i) out = mp_multiply(out, base);
    return out;
}

ModPiWord parse_mapclass_word(const std::string& word) {
    std::string cleaned = word;
    for (char& ch : cleaned)
        if (ch == '*') ch = ' ';
    std::istringstream in(cleaned);
    ModPiWord out = mp_identity();
    std::string tok;
    while (in >> tok) {
        if (tok == "F")
            out = mp_multiply(out, mp_f());
        else if (tok == "F'")
            out = mp_multiply(out, mp_f_inverse());
        else if (tok == "t")
            out = mp_multiply(out, mp_t());
        else if (tok == "t'")
            out = mp_multiply(out, mp_t_inverse());
        else
            throw Error("parse", "unknown mapping class token '" + tok + "' (expected F, F', t, t')");
    }
    return out;
}

bool operator==(const ModXImage& a, const ModXImage& b) { return a.m == b.m && a.k == b.k; }

ModXImage to_mod_x(const ModPiWord& w) {
    return {w.m, odd(w.k) ? 1 : 0};
}

ModXImage mod_x_multiply(const ModXImage& a, const ModXImage& b) {
    Int m = a.m + (a.k == 1 ? -b.m : b.m);
    return {m, (a.k + b.k) % 2};
}

IntegerMatrix h2_gram() {
    return IntegerMatrix::from_rows({{0, 0}, {0, -2}});
}

IntegerMatrix pairing_table() {
    return IntegerMatrix::from_rows({{1, 0}, {1, -1}});
}

IntegerMatrix h2_action(const ModPiWord& w) {
    // F^m is a shear c -> c + 2m e; t reflects c.
    IntegerMatrix a = IntegerMatrix::identity(2);
    a.at(0, 1) = 2 * w.m;
    if (odd(w.k)) {
        a.at(1, 1) = -1;
        a.at(0, 1) = -a.at(0, 1);
    }
    return a;
}

IntegerMatrix h2_rel_action(const ModPiWord& w) {
    IntegerMatrix b = rel_action_f_power(w.m);
    if (odd(w.k)) b = b * rel_action_t();
    return b;
}

IntegerMatrix variation(const ModPiWord& w) {
    // Normal form splits the cocycle as var(F^m t^k) = var(F^m) B(t^k) + var(t^k),
    // and var(t^k) only depends on the parity of k.
    IntegerMatrix vf = variation_f_power(w.m);
    if (!odd(w.k)) return vf;
    return vf * rel_action_t() + variation_t();
}

LatticeVector sphere_class(const Int& n) {
    return {n, 1};
}

Int section_sphere_pairing(const Int& m, const Int& n) {
    Int normative = m - n;
    // Table route: sigma_m in (sigma_0, sigma_1) coordinates, paired against
    // c + n e through the pairing table. The table carries the opposite
    // orientation, so the two routes agree up to a global sign.
    IntegerMatrix phi = IntegerMatrix::identity(2) + scale(rel_nilpotent(), m);
    std::vector<Int> sigma = {phi.at(0, 0), phi.at(1, 0)};
    std::vector<Int> row = mat_vec(pairing_table().transpose(), sigma);
    Int computed = row[0] * n + row[1];
    if (computed != -normative) throw Error("internal", "section/sphere pairing routes disagree");
    return normative;
}

} // namespace mwlat
