#include "mwlat/monodromy.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace mwlat {

bool operator==(const VanishingCycle& a, const VanishingCycle& b) {
    return a.x == b.x && a.y == b.y;
}

bool cycle_primitive(const VanishingCycle& d) {
    Int g;
    mpz_gcd(g.get_mpz_t(), d.x.get_mpz_t(), d.y.get_mpz_t());
    return g == 1;
}

Int symplectic(const VanishingCycle& a, const VanishingCycle& b) {
    return a.x * b.y - a.y * b.x;
}

VanishingCycle apply_sl2(const SL2Element& m, const VanishingCycle& d) {
    return VanishingCycle{m.at(0, 0) * d.x + m.at(0, 1) * d.y,
                          m.at(1, 0) * d.x + m.at(1, 1) * d.y};
}

SL2Element picard_lefschetz(const VanishingCycle& delta) {
    if (!cycle_primitive(delta)) throw Error("precondition", "vanishing cycle is not primitive");
    SL2Element m(2, 2);
    m.at(0, 0) = 1 + delta.x * delta.y;
    m.at(0, 1) = -delta.x * delta.x;
    m.at(1, 0) = delta.y * delta.y;
    m.at(1, 1) = 1 - delta.x * delta.y;
    return m;
}

SL2Element product_monodromy(const CycleTuple& t) {
    SL2Element p = IntegerMatrix::identity(2);
    for (const auto& d : t) p = picard_lefschetz(d) * p;
    return p;
}

std::string Sl2Class::name() const {
    switch (kind) {
        case Sl2Kind::identity: return "identity";
        case Sl2Kind::minus_identity: return "minus_identity";
        case Sl2Kind::parabolic: return "parabolic";
        case Sl2Kind::hyperbolic: return "hyperbolic";
        case Sl2Kind::elliptic: {
            std::ostringstream os;
            os << "elliptic(order " << order << ")";
            return os.str();
        }
    }
    return "";
}

Sl2Class classify_sl2(const SL2Element& a) {
    if (a.rows() != 2 || a.cols() != 2) throw Error("shape", "SL2 element must be 2x2");
    if (a.determinant() != 1) throw Error("precondition", "matrix determinant is not 1");
    Int tr = a.trace();
    if (tr > 2 || tr < -2) return {Sl2Kind::hyperbolic};
    if (tr == 2) return a.is_identity() ? Sl2Class{Sl2Kind::identity, 1} : Sl2Class{Sl2Kind::parabolic};
    if (tr == -2) {
        IntegerMatrix minus_i = -IntegerMatrix::identity(2);
        return a == minus_i ? Sl2Class{Sl2Kind::minus_identity, 2} : Sl2Class{Sl2Kind::parabolic};
    }
    // |trace| < 2: finite order, at most 6
    IntegerMatrix p = a;
    for (std::size_t k = 1; k <= 6; ++k) {
        if (p.is_identity()) return {Sl2Kind::elliptic, k};
        p = p * a;
    }
    throw Error("internal", "elliptic element without order <= 6");
}

Int two_nodal_trace(const Int& p, const Int& q) {
    VanishingCycle plus{1, 0}, minus{p, q};
    if (!cycle_primitive(minus)) throw Error("precondition", "(p, q) is not primitive");
    SL2Element composite = picard_lefschetz(minus) * picard_lefschetz(plus);
    Int tr = composite.trace();
    if (tr != 2 - q * q) throw Error("internal", "trace does not match 2 - q^2");
    return tr;
}

FgAbelianGroup torus_bundle_mw(const SL2Element& a) {
    if (a.rows() != 2 || a.cols() != 2) throw Error("shape", "SL2 element must be 2x2");
    if (a.determinant() != 1) throw Error("precondition", "matrix determinant is not 1");
    return cokernel(a - IntegerMatrix::identity(2));
}

CycleTuple hurwitz_move(const CycleTuple& t, std::size_t i, MoveDirection dir) {
    if (i < 1 || i >= t.size()) throw Error("range", "move position out of range");
    CycleTuple out = t;
    const VanishingCycle& a = t[i - 1];
    const VanishingCycle& b = t[i];
    if (dir == MoveDirection::right) {
        out[i - 1] = b;
        out[i] = apply_sl2(picard_lefschetz(b), a);
    } else {
        SL2Element inv(2, 2);
        SL2Element ta = picard_lefschetz(a);
        inv.at(0, 0) = ta.at(1, 1);
        inv.at(0, 1) = -ta.at(0, 1);
        inv.at(1, 0) = -ta.at(1, 0);
        inv.at(1, 1) = ta.at(0, 0);
        out[i - 1] = apply_sl2(inv, b);
        out[i] = a;
    }
    return out;
}

std::size_t adjacent_equinodal_index(const CycleTuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const auto& a = t[i];
        const auto& b = t[i + 1];
        if ((a.x == b.x && a.y == b.y) || (a.x == -b.x && a.y == -b.y)) return i + 1;
    }
    return 0;
}

namespace {

std::string tuple_key(const CycleTuple& t) {
    std::ostringstream os;
    for (const auto& d : t) os << d.x << ',' << d.y << ';';
    return os.str();
}

VanishingCycle sign_normalized(const VanishingCycle& d) {
    if (d.x < 0 || (d.x == 0 && d.y < 0)) return {-d.x, -d.y};
    return d;
}

} // namespace

EquinodalSearch find_equinodal_pairs(const CycleTuple& t, std::size_t max_moves,
                                     std::size_t max_hits, std::size_t node_budget) {
    EquinodalSearch out;
    if (t.empty()) {
        out.exhausted = true;
        return out;
    }

    struct Node {
        CycleTuple tuple;
        std::vector<std::pair<std::size_t, MoveDirection>> moves;
    };
    std::deque<Node> frontier;
    std::set<std::string> seen;
    frontier.push_back({t, {}});
    seen.insert(tuple_key(t));
    out.exhausted = true;

    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        ++out.visited;

        std::size_t idx = adjacent_equinodal_index(node.tuple);
        if (idx != 0) {
            out.hits.push_back({node.moves, idx, sign_normalized(node.tuple[idx - 1]), node.tuple});
            if (out.hits.size() >= max_hits) {
                out.exhausted = frontier.empty();
                return out;
            }
        }
        if (node.moves.size() >= max_moves) continue;
        if (out.visited >= node_budget) {
            out.exhausted = false;
            break;
        }
        for (std::size_t i = 1; i < node.tuple.size(); ++i)
            for (MoveDirection dir : {MoveDirection::right, MoveDirection::left}) {
                CycleTuple next = hurwitz_move(node.tuple, i, dir);
                std::string key = tuple_key(next);
                if (!seen.insert(key).second) continue;
                auto moves = node.moves;
                moves.emplace_back(i, dir);
                frontier.push_back({std::move(next), std::move(moves)});
            }
    }
    return out;
}

} // namespace mwlat
