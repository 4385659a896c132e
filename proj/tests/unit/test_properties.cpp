// Seeded random checks of the algebraic identities the library relies on.
#include <random>

#include "critlib/chipfire.hpp"
#include "critlib/intlinalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;

namespace {

// Z-matrix with strictly dominant diagonal in every row; such matrices are avalanche-finite.
IntMatrix random_avalanche_finite(std::mt19937& gen, std::size_t n) {
    std::uniform_int_distribution<long> off(-2, 0), slack(1, 2);
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer row = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                c(i, j) = off(gen);
                row -= c(i, j);
            }
        c(i, i) = row + slack(gen);
    }
    return c;
}

IntVector random_config(std::mt19937& gen, std::size_t n, long hi) {
    std::uniform_int_distribution<long> d(0, hi);
    IntVector v(n);
    for (auto& x : v) x = d(gen);
    return v;
}

}  // namespace

TEST_CASE("Smith normal form identities") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + gen() % 5, c = 1 + gen() % 5;
        auto a = oracle::random_matrix(gen, r, c, -9, 9);
        auto snf = smith_normal_form(a);
        CHECK(snf.U * a * snf.V == snf.S);
        CHECK(abs(determinant(snf.U)) == 1);
        CHECK(abs(determinant(snf.V)) == 1);
        auto d = snf.diagonal();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(snf.S(i, j) == 0);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            else CHECK(d[i + 1] == 0);
        }
        auto inv = cokernel_invariants(a);
        CHECK(inv.free_rank == r - rank(a));
        if (r == c) {
            CHECK(determinant(a) == oracle::cofactor_det(a));
            if (inv.finite()) CHECK(inv.torsion_order() == abs(determinant(a)));
        }
    }
}

TEST_CASE("lattice quotient canonical forms") {
    std::mt19937 gen(8);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + gen() % 3;
        auto a = oracle::random_matrix(gen, n, n, -4, 4);
        LatticeQuotient q(a);
        auto x = oracle::random_matrix(gen, n, 1, -20, 20);
        IntVector xv(n), z(n);
        for (std::size_t i = 0; i < n; ++i) xv[i] = x(i, 0);
        for (auto& t : z) t = static_cast<long>(gen() % 7) - 3;
        IntVector y = add(xv, a.apply(z));
        CHECK(q.equivalent(xv, y));
        CHECK(q.canonical(xv) == q.canonical(y));
        CHECK(q.contains(a.apply(z)));
        CHECK(q.equivalent(q.reduce(xv), xv));
        auto pre = q.preimage(a.apply(z));
        REQUIRE(pre);
        CHECK(a.apply(*pre) == a.apply(z));
    }
}

TEST_CASE("matrix-tree theorem on random multidigraphs") {
    std::mt19937 gen(9);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + gen() % 4;
        std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b) adj[a][b] = static_cast<long>(gen() % 3);
        // L = out-degree diagonal minus adjacency; in-trees to node 0 are counted by the struck Laplacian
        IntMatrix l(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b) l(a, b) = -adj[a][b];
                l(a, a) += adj[a][b];
            }
        CHECK(arborescence_count(strike(l, 0)) == oracle::count_in_trees(adj, 0));
    }
}

TEST_CASE("chip-firing on random avalanche-finite matrices") {
    std::mt19937 gen(10);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + gen() % 3;
        auto sys = ChipSystem::certify(random_avalanche_finite(gen, n));
        CAPTURE(to_string(sys.matrix()));

        auto rec = sys.recurrent_representatives();
        CHECK(std::set<IntVector>(rec.begin(), rec.end()) == oracle::recurrent_closure(sys));
        CHECK(Integer(static_cast<long>(rec.size())) == abs(sys.det()));
        for (const auto& v : rec) CHECK(sys.is_superstable(sub(sys.vC(), v)));

        for (int k = 0; k < 20; ++k) {
            IntVector v = random_config(gen, n, 12), p = random_config(gen, n, 5);
            auto q = sys.stabilize(v);
            auto m = sys.stabilize(v, FiringStrategy::MaxSurplus);
            CHECK(q.stable == m.stable);
            CHECK(q.record.counts == m.record.counts);
            CHECK(sub(v, sys.transpose().apply(q.record.counts)) == q.stable);
            CHECK(sys.is_stable(q.stable));
            CHECK(sys.stabilize(add(v, p)).stable == sys.stabilize(add(q.stable, p)).stable);
            auto s = q.stable;
            std::size_t i = gen() % n, j = gen() % n;
            CHECK(sys.avalanche_op(sys.avalanche_op(s, i), j) == sys.avalanche_op(sys.avalanche_op(s, j), i));
            // the result of stabilizing from a state at least v^C is recurrent
            CHECK(sys.is_recurrent(sys.stabilize(add(sys.vC(), p)).stable));
        }

        for (const auto& u : sys.superstable_representatives()) {
            CHECK(sys.is_superstable_direct(u));
            CHECK(oracle::superstable_box(sys, u, 3));
        }
    }
}
