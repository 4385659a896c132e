#include <cstdlib>
#include <functional>
#include <random>

#include "critlib/chipfire.hpp"
#include "critlib/rootsys.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;
using oracle::iv;

namespace {

ChipSystem a4_mckay() { return ChipSystem::certify(IntMatrix::from_rows({{3, 0, -1}, {0, 3, -1}, {-1, -1, 1}})); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

std::vector<ChipSystem> test_systems() {
    std::vector<ChipSystem> out{a4_mckay()};
    for (const char* t : {"A3", "B2", "G2", "C3", "D4"}) out.push_back(ChipSystem::certify(cartan_matrix(DynkinType::parse(t))));
    out.push_back(ChipSystem::certify(IntMatrix::from_rows({{4, -2, -1}, {-1, 3, -1}, {-2, 0, 5}})));
    return out;
}

}  // namespace

TEST_CASE("certification") {
    auto id = ChipSystem::certify(IntMatrix::identity(3));
    CHECK(id.certificate().witness_r == RatVector{1, 1, 1});
    CHECK(id.certificate().inverse_nonneg);
    CHECK(id.det() == 1);
    CHECK(a4_mckay().det() == 3);
    CHECK(a4_mckay().vC() == iv({2, 2, 0}));
    CHECK(code_of([] { ChipSystem::certify(IntMatrix::from_rows({{2, 1}, {-1, 2}})); }) == ErrorCode::NotZMatrix);
    CHECK(code_of([] { ChipSystem::certify(IntMatrix::from_rows({{1, -1}, {-1, 1}})); }) == ErrorCode::NotAvalancheFinite);
    CHECK(code_of([] { ChipSystem::certify(IntMatrix::from_rows({{1, -2}, {-2, 1}})); }) == ErrorCode::NotAvalancheFinite);
    // affine A1 is singular
    CHECK(code_of([] { ChipSystem::certify(IntMatrix::from_rows({{2, -2}, {-2, 2}})); }) == ErrorCode::NotAvalancheFinite);
}

TEST_CASE("toppling and stabilization") {
    auto sys = a4_mckay();
    CHECK(sys.topple(iv({3, 0, 0}), 0) == iv({0, 0, 1}));
    CHECK(code_of([&] { sys.topple(iv({2, 0, 0}), 0); }) == ErrorCode::InvalidToppling);
    auto s = sys.stabilize(iv({2, 2, 1}));
    CHECK(s.stable == iv({2, 2, 0}));
    CHECK(s.record.counts == iv({1, 1, 3}));
    CHECK(s.record.sequence.size() == 5);
    CHECK(code_of([&] { sys.stabilize(iv({-1, 0, 0})); }) == ErrorCode::NegativeInput);
    CHECK(code_of([&] { sys.stabilize(iv({1, 0})); }) == ErrorCode::InvalidArgument);
    // replaying the firing sequence one toppling at a time reproduces the output
    IntVector v = iv({7, 5, 4});
    auto r = sys.stabilize(v);
    for (auto i : r.record.sequence) v = sys.topple(v, i);
    CHECK(v == r.stable);
}

TEST_CASE("recurrents match the closure oracle") {
    for (const auto& sys : test_systems()) {
        auto rec = sys.recurrent_representatives();
        std::set<IntVector> got(rec.begin(), rec.end());
        CHECK(got == oracle::recurrent_closure(sys));
        CHECK(Integer(static_cast<long>(rec.size())) == abs(sys.det()));
        for (std::size_t i = 0; i < rec.size(); ++i)
            for (std::size_t j = i + 1; j < rec.size(); ++j) CHECK_FALSE(sys.quotient().equivalent(rec[i], rec[j]));
    }
}

TEST_CASE("superstables: definition, duality and energy") {
    for (const auto& sys : test_systems()) {
        auto sup = sys.superstable_representatives();
        std::set<IntVector> sup_set(sup.begin(), sup.end());
        for (const auto& v : sys.stable_configurations()) {
            bool by_definition = oracle::superstable_box(sys, v, 4);
            CHECK(sys.is_superstable(v) == by_definition);
            CHECK(sys.is_superstable_direct(v) == by_definition);
            CHECK(sup_set.count(v) == (by_definition ? 1u : 0u));
            CHECK(sys.is_superstable(v) == sys.is_recurrent(sub(sys.vC(), v)));
        }
    }
    auto a2 = ChipSystem::certify(cartan_matrix(DynkinType::parse("A2")));
    CHECK(a2.energy(iv({1, 0})) == Rational(5, 9));
    CHECK(a2.energy(iv({0, 0})) == 0);
    auto sys = a4_mckay();
    CHECK(sys.is_superstable(iv({0, 0, 0})));
    CHECK_FALSE(sys.is_superstable(iv({1, 1, 0})));
    CHECK_FALSE(sys.is_superstable(iv({-1, 0, 0})));
}

TEST_CASE("burning configurations") {
    auto sys = a4_mckay();
    auto cert = sys.check_burning(iv({0, 0, 1}));
    CHECK(cert.z == iv({1, 1, 3}));
    for (const auto& v : sys.recurrent_representatives()) {
        auto verdict = sys.recurrent_test_via_burning(cert, v);
        CHECK(verdict.recurrent);
        CHECK(verdict.counts_match);
        CHECK(verdict.record.sequence.size() == 5);
    }
    CHECK_FALSE(sys.recurrent_test_via_burning(cert, iv({0, 0, 0})).recurrent);
    CHECK(code_of([&] { sys.check_burning(iv({1, 0, 0})); }) == ErrorCode::NotInImage);
    CHECK(code_of([&] { sys.check_burning(iv({0, 0, -1})); }) == ErrorCode::NotNonnegative);
    // b = C^t e_1 never reaches node 2 of a diagonal matrix
    auto diag = ChipSystem::certify(IntMatrix::from_rows({{2, 0}, {0, 2}}));
    CHECK(code_of([&] { diag.check_burning(iv({2, 0})); }) == ErrorCode::NotCovering);
}

TEST_CASE("zero coset and enumeration guard") {
    auto sys = a4_mckay();
    auto z = sys.zero_coset_recurrent();
    CHECK(sys.is_recurrent(z));
    CHECK(sys.quotient().contains(z));
    auto a1 = ChipSystem::certify(cartan_matrix(DynkinType::parse("A1")));
    CHECK(a1.zero_coset_recurrent() == iv({0}));
    auto e8 = ChipSystem::certify(cartan_matrix(DynkinType::parse("E8")));
    CHECK(e8.zero_coset_recurrent() == constant_vector(8, 1));

    auto big = ChipSystem::certify(IntMatrix::from_rows({{2000000}}));
    CHECK(code_of([&] { big.stable_configurations(); }) == ErrorCode::TooLarge);
    setenv("CRITLIB_GUARD", "5", 1);
    CHECK(enumeration_guard() == 5);
    CHECK(code_of([&] { sys.stable_configurations(); }) == ErrorCode::TooLarge);
    unsetenv("CRITLIB_GUARD");
    CHECK(enumeration_guard() == 1000000);
}

TEST_CASE("extended cokernel relations") {
    auto r = extended_cokernel_relations(IntMatrix::from_rows({{3, 0, 0, -1}, {0, 3, 0, -1}, {0, 0, 3, -1}, {-1, -1, -1, 1}}));
    CHECK(r.delta == iv({1, 1, 1, 3}));
    CHECK(r.gamma == iv({1, 1, 1, 3}));
    CHECK(r.hypotheses_hold());
    CHECK(r.relations_hold());
    CHECK(r.coker_t.to_string() == "Z/3");
    CHECK(r.coker_ext_t.to_string() == "Z x Z/3");

    auto bad = extended_cokernel_relations(IntMatrix::from_rows({{30, -15}, {-20, 10}}));
    CHECK(bad.delta == iv({1, 2}));
    CHECK(bad.gamma == iv({2, 3}));
    CHECK_FALSE(bad.gamma_unit);
    CHECK_FALSE(bad.relations_hold());
    CHECK(code_of([] { extended_cokernel_relations(IntMatrix::identity(2)); }) == ErrorCode::RankDeficiencyNotOne);

    auto q = perp_quotient_invariants(iv({1, 1, 1, 3}),
                                      IntMatrix::from_rows({{3, 0, 0, -1}, {0, 3, 0, -1}, {0, 0, 3, -1}, {-1, -1, -1, 1}}).transpose());
    CHECK(q.to_string() == "Z/3");
    CHECK(code_of([] { perp_quotient_invariants(iv({2, 2}), IntMatrix(2, 0)); }) == ErrorCode::InvalidArgument);
}
