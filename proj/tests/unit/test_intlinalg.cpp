#include <random>

#include "critlib/intlinalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;
using oracle::iv;

namespace {

bool smith_form(const IntMatrix& s) {
    auto d = SmithDecomposition{IntMatrix(), s, IntMatrix()}.diagonal();
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && sgn(s(i, j)) != 0) return false;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (sgn(d[k]) < 0) return false;
        if (k + 1 < d.size()) {
            if (sgn(d[k]) == 0 && sgn(d[k + 1]) != 0) return false;
            if (sgn(d[k]) != 0 && d[k + 1] % d[k] != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
    auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto snf = smith_normal_form(a);
    CHECK(snf.diagonal() == iv({2, 6, 12}));
    CHECK(snf.U * a * snf.V == snf.S);
    CHECK(abs(determinant(snf.U)) == 1);
    CHECK(abs(determinant(snf.V)) == 1);

    CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}})).to_string() == "Z/6");
    CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0}, {0, 4}})).to_string() == "Z/2 x Z/4");
    CHECK(cokernel_invariants(IntMatrix::from_rows({{1, 0}, {0, 1}})).to_string() == "0");
    CHECK(cokernel_invariants(IntMatrix::from_rows({{0}})).to_string() == "Z");
}

TEST_CASE("cokernel of a rectangular matrix counts free rank as rows - rank") {
    // Z^3 / span{(1,0,0), (0,2,0)} = Z/2 x Z
    auto a = IntMatrix::from_rows({{1, 0}, {0, 2}, {0, 0}});
    auto g = cokernel_invariants(a);
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == iv({2}));
    CHECK(g.to_string() == "Z x Z/2");
    CHECK(cokernel_invariants(IntMatrix(3, 0)).to_string() == "Z^3");
}

TEST_CASE("invariant factor normalisation") {
    CHECK(AbelianGroupInvariants::from_cyclic_factors(iv({4, 6})).to_string() == "Z/2 x Z/12");
    CHECK(AbelianGroupInvariants::from_cyclic_factors(iv({2, 3})).to_string() == "Z/6");
    CHECK(AbelianGroupInvariants::from_cyclic_factors(iv({1, 1})).to_string() == "0");
    CHECK(AbelianGroupInvariants::from_cyclic_factors(iv({0, 0, 5})).to_string() == "Z^2 x Z/5");
    CHECK(AbelianGroupInvariants::from_cyclic_factors(iv({4, 6})).torsion_order() == 24);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 gen(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 5;
        auto a = oracle::random_matrix(gen, n, n, -9, 9);
        CHECK(determinant(a) == oracle::cofactor_det(a));
        CHECK(determinant(to_rational(a)) == Rational(oracle::cofactor_det(a)));
    }
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("inverse, solve and rank") {
    auto a = IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    auto inv = exact_inverse(a);
    CHECK(to_rational(a) * inv == RationalMatrix::identity(3));
    CHECK(inv(0, 0) == Rational(3, 4));
    auto x = solve(a, iv({1, 0, 1}));
    CHECK(x == RatVector{1, 1, 1});
    CHECK(rank(a) == 3);
    CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
    try {
        exact_inverse(IntMatrix::from_rows({{1, 2}, {2, 4}}));
        FAIL("expected Singular");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Singular);
    }
}

TEST_CASE("primitive null vectors") {
    auto c = IntMatrix::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK(nullspace_primitive(c) == iv({1, 1, 1}));
    CHECK(nullspace_primitive(IntMatrix::from_rows({{30, -15}, {-20, 10}})) == iv({1, 2}));
    CHECK_FALSE(nullspace_primitive(IntMatrix::identity(2)).has_value());
    try {
        nullspace_primitive(IntMatrix(2, 3));
        FAIL("expected RankDeficiencyNotOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficiencyNotOne);
    }
}

TEST_CASE("matrix-tree theorem against brute-force arborescence counts") {
    std::mt19937 gen(3);
    std::uniform_int_distribution<long> arcs(0, 2);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 4;
        std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
        IntMatrix lap(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                adj[a][b] = arcs(gen);
                lap(a, a) += adj[a][b];
                lap(a, b) -= adj[a][b];
            }
        CHECK(arborescence_count(strike(lap, 0)) == oracle::count_in_trees(adj, 0));
    }
}

TEST_CASE("lattice quotient membership and canonical forms") {
    auto a = IntMatrix::from_rows({{3, 0, -1}, {0, 3, -1}, {-1, -1, 1}}).transpose();
    LatticeQuotient q(a);
    CHECK(q.invariants().to_string() == "Z/3");
    CHECK(q.contains(a.col(0)));
    CHECK(q.contains(add(a.col(1), scale(2, a.col(2)))));
    CHECK_FALSE(q.contains(iv({1, 0, 0})));
    CHECK(q.equivalent(iv({2, 2, 0}), add(iv({2, 2, 0}), a.col(1))));
    auto w = q.preimage(add(a.col(0), a.col(2)));
    REQUIRE(w.has_value());
    CHECK(a.apply(*w) == add(a.col(0), a.col(2)));
    CHECK_FALSE(q.preimage(iv({1, 0, 0})).has_value());
    // canonical forms are constant on cosets
    std::mt19937 gen(5);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        IntVector x{d(gen), d(gen), d(gen)}, z{d(gen), d(gen), d(gen)};
        CHECK(q.canonical(x) == q.canonical(add(x, a.apply(z))));
        CHECK(q.contains(sub(q.reduce(x), x)));
    }
}

TEST_CASE("vector helpers and rendering") {
    CHECK(to_string(iv({1, -2})) == "[1,-2]");
    CHECK(to_string(IntMatrix::from_rows({{2}})) == "[[2]]");
    CHECK(dot(iv({1, 2}), iv({3, 4})) == 11);
    CHECK(is_nonnegative(iv({0, 1})));
    CHECK_FALSE(is_nonnegative(iv({0, -1})));
    CHECK(strike(IntMatrix::from_rows({{1, 2}, {3, 4}}), 0) == IntMatrix::from_rows({{4}}));
    CHECK_THROWS_AS(add(iv({1}), iv({1, 2})), Error);
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), Error);
}

TEST_CASE("snf handles zero and degenerate shapes") {
    CHECK(smith_form(smith_normal_form(IntMatrix(2, 2)).S));
    auto s = smith_normal_form(IntMatrix::from_rows({{0, 0, 6}, {0, 4, 0}}));
    CHECK(s.diagonal() == iv({2, 12}));
    CHECK(smith_form(s.S));
    CHECK(smith_normal_form(IntMatrix::from_rows({{-5}})).diagonal() == iv({5}));
}
