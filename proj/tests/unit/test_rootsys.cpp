#include <functional>
#include <map>

#include "critlib/rootsys.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;
using oracle::iv;

namespace {

std::vector<DynkinType> all_types(int max_classical) {
    std::vector<DynkinType> out;
    for (char f : {'A', 'B', 'C', 'D'})
        for (int l = 1; l <= max_classical; ++l) {
            if ((f == 'B' && l < 2) || (f == 'C' && l < 3) || (f == 'D' && l < 4)) continue;
            out.push_back({f, l});
        }
    for (auto t : {DynkinType{'E', 6}, DynkinType{'E', 7}, DynkinType{'E', 8}, DynkinType{'F', 4}, DynkinType{'G', 2}})
        out.push_back(t);
    return out;
}

// |Phi+|, Coxeter number, index of connection, minuscule nodes (1-based) from the classification.
struct Known {
    long positive;
    long h;
    long f;
    std::vector<std::size_t> minuscule;
};

Known known(const DynkinType& t) {
    const long n = t.rank;
    switch (t.family) {
        case 'A': {
            std::vector<std::size_t> m;
            for (long i = 1; i <= n; ++i) m.push_back(i);
            return {n * (n + 1) / 2, n + 1, n + 1, m};
        }
        case 'B': return {n * n, 2 * n, 2, {static_cast<std::size_t>(n)}};
        case 'C': return {n * n, 2 * n, 2, {1}};
        case 'D': return {n * (n - 1), 2 * n - 2, 4, {1, static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n)}};
        case 'E':
            if (n == 6) return {36, 12, 3, {1, 6}};
            if (n == 7) return {63, 18, 2, {7}};
            return {120, 30, 1, {}};
        case 'F': return {24, 12, 1, {}};
        default: return {6, 6, 1, {}};
    }
}

Integer brute_force_chains(const RootPoset& p) {
    std::map<std::size_t, std::vector<std::size_t>> up;
    for (const auto& c : p.covers) up[c.lower].push_back(c.upper);
    std::function<Integer(std::size_t)> count = [&](std::size_t r) -> Integer {
        if (r == p.maximum) return 1;
        Integer s = 0;
        for (auto u : up[r]) s += count(u);
        return s;
    };
    Integer total = 0;
    for (std::size_t i = 0; i < p.roots.size(); ++i)
        if (p.roots[i].height == 1) total += count(i);
    return total;
}

}  // namespace

TEST_CASE("type parsing") {
    CHECK(DynkinType::parse("e6") == DynkinType{'E', 6});
    CHECK(DynkinType::parse("C4").to_string() == "C4");
    for (const char* bad : {"Q3", "", "A", "Ax"}) CHECK_THROWS_AS(DynkinType::parse(bad), Error);
    try {
        DynkinType::parse("E9");
        FAIL("expected InvalidRank");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidRank);
    }
    try {
        DynkinType::parse("B1");
        FAIL("expected InvalidRank");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidRank);
    }
}

TEST_CASE("Cartan matrices follow Bourbaki numbering") {
    CHECK(cartan_matrix(DynkinType::parse("A1")) == IntMatrix::from_rows({{2}}));
    CHECK(cartan_matrix(DynkinType::parse("B3")) == IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
    CHECK(cartan_matrix(DynkinType::parse("C3")) == IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
    CHECK(cartan_matrix(DynkinType::parse("G2")) == IntMatrix::from_rows({{2, -1}, {-3, 2}}));
    CHECK(cartan_matrix(DynkinType::parse("F4")) ==
          IntMatrix::from_rows({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
    CHECK(cartan_matrix(DynkinType::parse("D4")) ==
          IntMatrix::from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
    CHECK(cartan_matrix(DynkinType::parse("E6")) == IntMatrix::from_rows({{2, 0, -1, 0, 0, 0},
                                                                           {0, 2, 0, -1, 0, 0},
                                                                           {-1, 0, 2, -1, 0, 0},
                                                                           {0, -1, -1, 2, -1, 0},
                                                                           {0, 0, 0, -1, 2, -1},
                                                                           {0, 0, 0, 0, -1, 2}}));
}

TEST_CASE("root system data matches the classification") {
    for (const auto& t : all_types(8)) {
        CAPTURE(t.to_string());
        auto d = RootSystemData::build(t);
        auto k = known(t);
        CHECK(d.poset.roots.size() == static_cast<std::size_t>(k.positive));
        CHECK(d.coxeter_number == k.h);
        CHECK(d.index_of_connection == k.f);
        CHECK(determinant(d.cartan) == k.f);
        CHECK(d.highest().height + 1 == k.h);
        std::vector<std::size_t> m;
        for (auto i : d.minuscule_nodes) m.push_back(i + 1);
        CHECK(m == k.minuscule);
        CHECK(minuscule_dominant_weights(t) == d.minuscule_nodes);
        // kernel vectors of the extended matrix
        CHECK(is_zero(d.extended_cartan.transpose().apply(d.marks)));
        CHECK(is_zero(d.extended_cartan.apply(d.phi)));
        CHECK(d.marks[0] == 1);
        CHECK(d.phi[0] == 1);
        // weights are C^t applied to simple coordinates
        for (const auto& r : d.poset.roots) CHECK(r.weight == d.cartan.transpose().apply(r.simple));
        if (t.simply_laced()) CHECK(d.highest_root == d.highest_short_root);
        CHECK(count_maximal_chains(d.poset) == brute_force_chains(d.poset));
        CHECK(critlib::cokernel_invariants(d.cartan.transpose()).torsion_order() == k.f);
    }
}

TEST_CASE("highest roots") {
    CHECK(RootSystemData::build(DynkinType::parse("E8")).highest().simple == iv({2, 3, 4, 6, 5, 4, 3, 2}));
    CHECK(RootSystemData::build(DynkinType::parse("F4")).highest().simple == iv({2, 3, 4, 2}));
    CHECK(RootSystemData::build(DynkinType::parse("G2")).highest().simple == iv({3, 2}));
    auto b4 = RootSystemData::build(DynkinType::parse("B4"));
    CHECK(b4.highest().simple == iv({1, 2, 2, 2}));
    CHECK(b4.highest_short().simple == iv({1, 1, 1, 1}));
    auto c4 = RootSystemData::build(DynkinType::parse("C4"));
    CHECK(c4.highest().simple == iv({2, 2, 2, 1}));
    CHECK(c4.highest_short().simple == iv({1, 2, 2, 1}));
    CHECK(c4.dual_marks == iv({1, 1, 2, 2, 2}));
}

TEST_CASE("minuscule superstables and recurrents for small ranks") {
    for (const auto& t : all_types(6)) {
        CAPTURE(t.to_string());
        auto r = verify_theorem_1_1(t);
        CHECK(r.passed());
        CHECK(r.superstables.size() == r.recurrents.size());
    }
}

TEST_CASE("stabilization chain from rho") {
    for (const char* name : {"A4", "B3", "C3", "D5", "E6", "F4", "G2"}) {
        CAPTURE(name);
        auto d = RootSystemData::build(DynkinType::parse(name));
        auto ch = stabilization_chain_from_rho(d);
        CHECK(ch.chain.size() + 1 == d.coxeter_number);
        CHECK(ch.states.front() == add(d.rho(), d.highest().weight));
        CHECK(ch.states.back() == d.rho());
        CHECK(ch.record.sequence.size() + 1 == ch.states.size());
        auto sys = ChipSystem::certify(d.cartan);
        for (std::size_t k = 0; k < ch.record.sequence.size(); ++k)
            CHECK(sys.topple(ch.states[k], ch.record.sequence[k]) == ch.states[k + 1]);
        CHECK(sys.stabilize(ch.states.front()).stable == d.rho());
        CHECK(ch.chain.back() == d.highest_root);
    }
}

TEST_CASE("numbers game and looping sequences") {
    auto a2 = cartan_matrix(DynkinType::parse("A2"));
    CHECK(numbers_fire(a2, iv({-1, 0}), 0) == iv({1, -1}));
    try {
        numbers_fire(a2, iv({1, 0}), 0);
        FAIL("expected NotNegativeAtNode");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNegativeAtNode);
    }
    for (const auto& t : all_types(7)) {
        auto d = RootSystemData::build(t);
        for (auto node : d.minuscule_nodes) {
            CAPTURE(t.to_string());
            CAPTURE(node);
            auto l = minuscule_toppling_and_looping(d, node);
            CHECK(static_cast<int>(l.fired.size()) == d.highest_short().height);
            CHECK(l.padded.front() == l.padded.back());
            for (const auto& u : l.padded) CHECK(dot(l.padding, u) == 0);
            CHECK(strike(l.game_matrix, 0) == d.cartan);
        }
    }
    auto e8 = RootSystemData::build(DynkinType::parse("E8"));
    try {
        minuscule_toppling_and_looping(e8, 0);
        FAIL("expected NotMinuscule");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMinuscule);
    }
}

TEST_CASE("burning configurations for Cartan matrices") {
    for (const char* name : {"A3", "B2", "G2", "E6"}) {
        auto d = RootSystemData::build(DynkinType::parse(name));
        CHECK(burning_configurations_cartan(DynkinType::parse(name), d.highest().weight));
    }
    CHECK_FALSE(burning_configurations_cartan(DynkinType::parse("A3"), iv({1, 0, 0})));
}

TEST_CASE("from_cartan rejects reducible input") {
    CHECK_THROWS_AS(RootSystemData::from_cartan(IntMatrix::from_rows({{2, 0}, {0, 2}}), "A1xA1"), Error);
    auto g2 = RootSystemData::from_cartan(cartan_matrix(DynkinType::parse("G2")), "G2");
    CHECK(g2.dual().cartan == g2.cartan.transpose());
}
