#pragma once
// Slow, obviously-correct reference computations used only by the tests.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "critlib/chipfire.hpp"
#include "critlib/intlinalg.hpp"

namespace oracle {

using critlib::Integer;
using critlib::IntMatrix;
using critlib::IntVector;

inline IntVector iv(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(0, j)) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = a(i, k);
        Integer term = a(0, j) * cofactor_det(minor);
        total += (j % 2 ? -term : term);
    }
    return total;
}

// Spanning in-arborescences rooted at `root` of the multidigraph adj (adj[a][b] = number of arcs a -> b).
inline Integer count_in_trees(const std::vector<std::vector<long>>& adj, std::size_t root) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> parent(n, root);
    Integer total = 0;
    std::function<void(std::size_t, Integer)> go = [&](std::size_t v, Integer weight) {
        if (v == n) {
            for (std::size_t s = 0; s < n; ++s) {
                std::size_t x = s;
                for (std::size_t step = 0; step <= n && x != root; ++step) x = parent[x];
                if (x != root) return;
            }
            total += weight;
            return;
        }
        if (v == root) return go(v + 1, weight);
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v || adj[v][w] == 0) continue;
            parent[v] = w;
            go(v + 1, weight * adj[v][w]);
        }
    };
    go(0, 1);
    return total;
}

// Recurrent configurations as the closure of the maximal stable configuration under
// "add one chip and stabilize"; uses only stabilize().
inline std::set<IntVector> recurrent_closure(const critlib::ChipSystem& sys) {
    std::set<IntVector> seen{sys.vC()};
    std::vector<IntVector> frontier{sys.vC()};
    while (!frontier.empty()) {
        IntVector v = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < sys.size(); ++i) {
            IntVector w = v;
            w[i] += 1;
            IntVector s = sys.stabilize(w).stable;
            if (seen.insert(s).second) frontier.push_back(s);
        }
    }
    return seen;
}

// Definition-level superstability with z searched over [0, bound]^l.
inline bool superstable_box(const critlib::ChipSystem& sys, const IntVector& u, long bound) {
    const std::size_t l = sys.size();
    IntVector z(l, 0);
    while (true) {
        std::size_t i = 0;
        while (i < l && z[i] == bound) z[i++] = 0;
        if (i == l) return true;
        ++z[i];
        IntVector w = critlib::sub(u, sys.transpose().apply(z));
        if (critlib::is_nonnegative(w)) return false;
    }
}

inline IntMatrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(gen);
    return m;
}

}  // namespace oracle
