#include <doctest.h>

#include "mwlat/abelian.hpp"

#include <random>

using namespace mwlat;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Int(dist(rng));
    return m;
}

bool divisibility_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] == 0) return d[i + 1] == 0;
        if (d[i + 1] % d[i] != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        auto m = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
        auto s = smith_normal_form(m);
        CHECK(s.diagonal() == std::vector<Int>{1, 6});
        CHECK(s.u * m * s.v == s.d);
    }
    SUBCASE("a singular matrix keeps its zero factor") {
        auto m = IntegerMatrix::from_rows({{0, -2}, {0, 0}});
        auto s = smith_normal_form(m);
        CHECK(s.diagonal() == std::vector<Int>{2, 0});
        CHECK(s.u * m * s.v == s.d);
    }
    SUBCASE("identity is already reduced") {
        auto m = IntegerMatrix::identity(3);
        auto s = smith_normal_form(m);
        CHECK(s.d == m);
        CHECK(s.u == m);
        CHECK(s.v == m);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> shape(1, 5);
        std::size_t r = shape(rng), c = shape(rng);
        auto m = random_matrix(rng, r, c, -9, 9);
        auto s = smith_normal_form(m);

        CHECK(s.u * m * s.v == s.d);
        Int du = s.u.determinant(), dv = s.v.determinant();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(divisibility_chain(s.diagonal()));
        for (const auto& x : s.diagonal()) CHECK(x >= 0);

        // off-diagonal zero
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);

        // idempotence: reducing the reduced form changes nothing
        auto s2 = smith_normal_form(s.d);
        CHECK(s2.d == s.d);

        if (r == c) {
            Int det = m.determinant();
            if (det != 0) {
                Int prod = 1;
                for (const auto& x : s.diagonal()) prod *= x;
                CHECK(prod == abs(det));
            }
        }
    }
}

TEST_CASE("cokernel on pinned examples") {
    SUBCASE("identity has trivial cokernel") {
        auto g = cokernel(IntegerMatrix::identity(2));
        CHECK(g.is_trivial());
    }
    SUBCASE("rank-one image in rank two") {
        auto g = cokernel(IntegerMatrix::from_rows({{0, -2}, {0, 0}}));
        CHECK(g.free_rank == 1);
        CHECK(g.torsion == std::vector<Int>{2});
    }
    SUBCASE("a column map") {
        auto g = cokernel(IntegerMatrix::from_rows({{3}, {0}}));
        CHECK(g.free_rank == 1);
        CHECK(g.torsion == std::vector<Int>{3});
    }
    SUBCASE("invariant factors stay combined") {
        auto g = cokernel(IntegerMatrix::from_rows({{2, 0}, {0, 3}}));
        CHECK(g.free_rank == 0);
        CHECK(g.torsion == std::vector<Int>{6});
    }
}

TEST_CASE("cokernel order matches the determinant") {
    std::mt19937_64 rng(0xc0ce);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 3, 3, -6, 6);
        Int det = m.determinant();
        auto g = cokernel(m);
        if (det == 0) {
            CHECK(g.free_rank > 0);
        } else {
            CHECK(g.free_rank == 0);
            CHECK(g.torsion_order() == abs(det));
        }
    }
}

TEST_CASE("saturated kernels") {
    SUBCASE("a line in the plane") {
        auto k = kernel_saturated(IntegerMatrix::from_rows({{1, 1}}));
        REQUIRE(k.cols() == 1);
        CHECK(abs(k.at(0, 0)) == 1);
        CHECK(k.at(0, 0) + k.at(1, 0) == 0);
    }
    SUBCASE("scaling the map does not change the kernel") {
        auto k1 = kernel_saturated(IntegerMatrix::from_rows({{1, 1}}));
        auto k2 = kernel_saturated(IntegerMatrix::from_rows({{2, 2}}));
        CHECK(k1 == k2);
    }
    SUBCASE("zero map has full kernel") {
        auto k = kernel_saturated(IntegerMatrix(2, 2));
        CHECK(k == IntegerMatrix::identity(2));
    }
    SUBCASE("kernel bases are saturated") {
        std::mt19937_64 rng(0x5a7);
        for (int trial = 0; trial < 40; ++trial) {
            auto m = random_matrix(rng, 2, 4, -5, 5);
            auto k = kernel_saturated(m);
            CHECK((m * k).is_zero());
            if (k.cols() > 0) {
                auto s = smith_normal_form(k);
                for (const auto& x : s.diagonal()) CHECK(x == 1);
            }
            // rank-nullity
            auto sm = smith_normal_form(m);
            CHECK(sm.rank() + k.cols() == m.cols());
        }
    }
}

TEST_CASE("group isomorphism compares normal forms") {
    CHECK(groups_isomorphic(FgAbelianGroup{0, {12}}, FgAbelianGroup{0, {12}}));
    CHECK_FALSE(groups_isomorphic(FgAbelianGroup{0, {12}}, FgAbelianGroup{0, {2, 6}}));
    CHECK_FALSE(groups_isomorphic(FgAbelianGroup{1, {}}, FgAbelianGroup{0, {}}));
    CHECK(groups_isomorphic(cokernel(IntegerMatrix::from_rows({{2, 0}, {0, 3}})),
                            FgAbelianGroup{0, {6}}));
}

TEST_CASE("group rendering") {
    CHECK(FgAbelianGroup{0, {}}.to_string() == "0");
    CHECK(FgAbelianGroup{1, {}}.to_string() == "Z");
    CHECK(FgAbelianGroup{2, {}}.to_string() == "Z^2");
    CHECK(FgAbelianGroup{1, {2}}.to_string() == "Z + Z/2");
    CHECK(FgAbelianGroup{0, {2, 6}}.to_string() == "Z/2 + Z/6");
}

TEST_CASE("exact solve and subquotients") {
    SUBCASE("solve against a column basis") {
        auto a = IntegerMatrix::from_rows({{2, 1}, {0, 3}});
        auto x = solve_exact(a, {Int(4), Int(6)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 1);
        CHECK((*x)[1] == 2);
        CHECK_FALSE(solve_exact(a, {Int(1), Int(0)}).has_value());
    }
    SUBCASE("subquotient of a chain of spans") {
        // span{2e1} + span{e1} over span{2e1} is Z/2
        auto num = IntegerMatrix::from_rows({{1}, {0}});
        auto den = IntegerMatrix::from_rows({{2}, {0}});
        auto g = subquotient(num, den);
        CHECK(g.free_rank == 0);
        CHECK(g.torsion == std::vector<Int>{2});
    }
    SUBCASE("subquotient with a free part") {
        auto num = IntegerMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}});
        auto den = IntegerMatrix::from_rows({{2}, {0}, {0}});
        auto g = subquotient(num, den);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion == std::vector<Int>{2});
    }
}

TEST_CASE("hermite form canonicalizes row spans") {
    auto a = hnf_rows(IntegerMatrix::from_rows({{1, 2}, {3, 4}}));
    auto b = hnf_rows(IntegerMatrix::from_rows({{3, 4}, {1, 2}}));
    CHECK(a == b);
    CHECK(a == IntegerMatrix::from_rows({{1, 0}, {0, 2}}));
    // a span of full index 1 reduces differently
    auto c = hnf_rows(IntegerMatrix::from_rows({{1, 2}, {3, 5}}));
    CHECK(c == IntegerMatrix::identity(2));
    CHECK(a != c);
}
