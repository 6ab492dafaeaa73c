#include <doctest.h>

#include "mwlat/monodromy.hpp"

#include <algorithm>
#include <random>

using namespace mwlat;

namespace {

CycleTuple random_tuple(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> dist(-4, 4);
    CycleTuple t;
    while (t.size() < n) {
        VanishingCycle d{Int(dist(rng)), Int(dist(rng))};
        if (cycle_primitive(d)) t.push_back(d);
    }
    return t;
}

} // namespace

TEST_CASE("dehn twist matrices") {
    CHECK(picard_lefschetz({Int(1), Int(0)}) == IntegerMatrix::from_rows({{1, -1}, {0, 1}}));
    CHECK(picard_lefschetz({Int(0), Int(1)}) == IntegerMatrix::from_rows({{1, 0}, {1, 1}}));
    SUBCASE("every twist fixes its own cycle and has det 1") {
        std::mt19937_64 rng(0x7157);
        for (int trial = 0; trial < 30; ++trial) {
            auto t = random_tuple(rng, 1);
            auto m = picard_lefschetz(t[0]);
            CHECK(m.determinant() == 1);
            CHECK(apply_sl2(m, t[0]) == t[0]);
        }
    }
    SUBCASE("imprimitive cycles are rejected") {
        CHECK_THROWS_AS(picard_lefschetz({Int(2), Int(0)}), Error);
        CHECK_THROWS_AS(picard_lefschetz({Int(0), Int(0)}), Error);
    }
}

TEST_CASE("products of twists") {
    CycleTuple two = {{Int(1), Int(0)}, {Int(1), Int(0)}};
    auto m = product_monodromy(two);
    CHECK(m == IntegerMatrix::from_rows({{1, -2}, {0, 1}}));

    CycleTuple pair = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    auto p = product_monodromy(pair);
    CHECK(p.trace() == 1);
    CHECK(p.pow(6).is_identity());
    CHECK_FALSE(p.pow(3).is_identity());

    CHECK(product_monodromy({}).is_identity());
}

TEST_CASE("conjugacy classification in SL2(Z)") {
    auto cls = [](std::vector<std::vector<long>> rows) {
        return classify_sl2(IntegerMatrix::from_rows(rows));
    };
    CHECK(cls({{1, 0}, {0, 1}}).kind == Sl2Kind::identity);
    CHECK(cls({{-1, 0}, {0, -1}}).kind == Sl2Kind::minus_identity);
    CHECK(cls({{-1, 0}, {0, -1}}).order == 2);
    CHECK(cls({{1, 5}, {0, 1}}).kind == Sl2Kind::parabolic);
    CHECK(cls({{-1, 5}, {0, -1}}).kind == Sl2Kind::parabolic);
    CHECK(cls({{0, -1}, {1, 0}}).kind == Sl2Kind::elliptic);
    CHECK(cls({{0, -1}, {1, 0}}).order == 4);
    CHECK(cls({{0, -1}, {1, 1}}).kind == Sl2Kind::elliptic);
    CHECK(cls({{0, -1}, {1, 1}}).order == 6);
    CHECK(cls({{0, -1}, {1, -1}}).order == 3);
    CHECK(cls({{2, 1}, {1, 1}}).kind == Sl2Kind::hyperbolic);
    CHECK(cls({{2, 1}, {1, 1}}).order == 0);
    SUBCASE("finite orders are exact") {
        auto m = IntegerMatrix::from_rows({{0, -1}, {1, 1}});
        auto c = classify_sl2(m);
        CHECK(m.pow(c.order).is_identity());
        for (std::size_t k = 1; k < c.order; ++k)
            CHECK_FALSE(m.pow(k).is_identity());
    }
}

TEST_CASE("two nodal fibers") {
    CHECK(two_nodal_trace(Int(0), Int(1)) == 1);
    CHECK(two_nodal_trace(Int(1), Int(0)) == 2);
    CHECK(two_nodal_trace(Int(1), Int(2)) == -2);
    CHECK(two_nodal_trace(Int(5), Int(3)) == -7);
    CHECK_THROWS_AS(two_nodal_trace(Int(2), Int(4)), Error);
    SUBCASE("trace matches the explicit product") {
        for (long p = -6; p <= 6; ++p)
            for (long q = -6; q <= 6; ++q) {
                if (gcd(Int(p), Int(q)) != 1) continue;
                CycleTuple t = {{Int(1), Int(0)}, {Int(p), Int(q)}};
                CHECK(product_monodromy(t).trace() == two_nodal_trace(Int(p), Int(q)));
            }
    }
}

TEST_CASE("mordell-weil of a torus bundle") {
    auto mw = [](std::vector<std::vector<long>> rows) {
        return torus_bundle_mw(IntegerMatrix::from_rows(rows));
    };
    SUBCASE("pinned examples") {
        auto id = mw({{1, 0}, {0, 1}});
        CHECK(id.free_rank == 2);
        CHECK(id.torsion.empty());

        auto six = mw({{0, -1}, {1, 1}}); // order 6, det(A - I) = 1
        CHECK(six.is_trivial());

        auto minus = mw({{-1, 0}, {0, -1}});
        CHECK(minus.free_rank == 0);
        CHECK(minus.torsion == std::vector<Int>{2, 2});

        auto par = mw({{1, -2}, {0, 1}});
        CHECK(par.free_rank == 1);
        CHECK(par.torsion == std::vector<Int>{2});
    }
    SUBCASE("finite case order equals |det(A - I)|") {
        std::mt19937_64 rng(0x70b);
        std::uniform_int_distribution<long> dist(-5, 5);
        int done = 0;
        while (done < 40) {
            long a = dist(rng), b = dist(rng), c = dist(rng);
            // complete to det 1 when possible
            if (a == 0) continue;
            // pick d with a*d - b*c = 1
            if ((1 + b * c) % a != 0) continue;
            long d = (1 + b * c) / a;
            auto m = IntegerMatrix::from_rows({{a, b}, {c, d}});
            Int det_ai = (Int(a) - 1) * (Int(d) - 1) - Int(b) * Int(c);
            auto g = torus_bundle_mw(m);
            if (det_ai != 0) {
                CHECK(g.free_rank == 0);
                CHECK(g.torsion_order() == abs(det_ai));
            } else {
                CHECK(g.free_rank > 0);
            }
            ++done;
        }
    }
}

TEST_CASE("hurwitz moves") {
    CycleTuple t = {{Int(1), Int(0)}, {Int(0), Int(1)}};

    SUBCASE("pinned right move") {
        CycleTuple r = hurwitz_move(t, 1, MoveDirection::right);
        REQUIRE(r.size() == 2);
        CHECK(r[0] == VanishingCycle{Int(0), Int(1)});
        CHECK(r[1] == VanishingCycle{Int(1), Int(1)});
    }
    SUBCASE("left and right are inverse") {
        std::mt19937_64 rng(0x1e57);
        for (int trial = 0; trial < 30; ++trial) {
            auto s = random_tuple(rng, 4);
            for (std::size_t i = 1; i < s.size(); ++i) {
                auto rl = hurwitz_move(hurwitz_move(s, i, MoveDirection::right), i, MoveDirection::left);
                CHECK(rl == s);
                auto lr = hurwitz_move(hurwitz_move(s, i, MoveDirection::left), i, MoveDirection::right);
                CHECK(lr == s);
            }
        }
    }
    SUBCASE("product monodromy is invariant") {
        std::mt19937_64 rng(0xabc1);
        std::uniform_int_distribution<std::size_t> which(1, 3);
        std::uniform_int_distribution<int> dir(0, 1);
        for (int trial = 0; trial < 50; ++trial) {
            auto s = random_tuple(rng, 4);
            auto before = product_monodromy(s);
            auto moved = hurwitz_move(s, which(rng), dir(rng) ? MoveDirection::right : MoveDirection::left);
            CHECK(product_monodromy(moved) == before);
            CHECK(moved.size() == s.size());
            for (const auto& d : moved) CHECK(cycle_primitive(d));
        }
    }
    SUBCASE("index bounds are enforced") {
        CHECK_THROWS_AS(hurwitz_move(t, 0, MoveDirection::right), Error);
        CHECK_THROWS_AS(hurwitz_move(t, 2, MoveDirection::right), Error);
    }
    SUBCASE("a move only touches the chosen slots") {
        std::mt19937_64 rng(0xfeed);
        for (int trial = 0; trial < 20; ++trial) {
            auto s = random_tuple(rng, 5);
            std::size_t i = 1 + static_cast<std::size_t>(trial % 4);
            auto moved = hurwitz_move(s, i, MoveDirection::right);
            CHECK(moved[i - 1] == s[i]); // the right neighbor slides over
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i - 1 && j != i) CHECK(moved[j] == s[j]);
        }
    }
}

TEST_CASE("equinodal pair search") {
    SUBCASE("an adjacent matching pair is found at depth zero") {
        CycleTuple t = {{Int(1), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}};
        auto res = find_equinodal_pairs(t, 3);
        REQUIRE(!res.hits.empty());
        CHECK(res.hits[0].moves.empty());
        CHECK(res.hits[0].pair_index == 1);
        CHECK(res.hits[0].tuple == t);
    }
    SUBCASE("opposite signs also count") {
        CycleTuple t = {{Int(1), Int(0)}, {Int(-1), Int(0)}};
        CHECK(adjacent_equinodal_index(t) == 1);
    }
    SUBCASE("depth zero with no adjacent pair yields nothing") {
        CycleTuple t = {{Int(1), Int(0)}, {Int(0), Int(1)}};
        auto res = find_equinodal_pairs(t, 0);
        CHECK(res.hits.empty());
        CHECK(res.exhausted);
    }
    SUBCASE("witness moves replay to the reported tuple") {
        CycleTuple t;
        for (int rep = 0; rep < 6; ++rep) {
            t.push_back({Int(1), Int(0)});
            t.push_back({Int(0), Int(1)});
        }
        auto res = find_equinodal_pairs(t, 4, 2);
        REQUIRE(!res.hits.empty());
        for (const auto& hit : res.hits) {
            CycleTuple replay = t;
            for (const auto& mv : hit.moves) replay = hurwitz_move(replay, mv.first, mv.second);
            CHECK(replay == hit.tuple);
            REQUIRE(hit.pair_index >= 1);
            REQUIRE(hit.pair_index < replay.size());
            const auto& a = replay[hit.pair_index - 1];
            const auto& b = replay[hit.pair_index];
            bool same = (a == b);
            bool opposite = (a.x == -b.x && a.y == -b.y);
            CHECK((same || opposite));
            CHECK(product_monodromy(replay) == product_monodromy(t));
        }
    }
}
