#include <functional>

#include "critlib/serialize.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;
using oracle::iv;

TEST_CASE("matrix JSON") {
    auto m = IntMatrix::from_rows({{3, 0, -1}, {0, 3, -1}, {-1, -1, 1}});
    auto text = matrix_to_json(m);
    CHECK(text == R"({"cols":3,"entries":[["3","0","-1"],["0","3","-1"],["-1","-1","1"]],"rows":3})");
    CHECK(matrix_from_json(text) == m);
    CHECK(matrix_from_json(R"({"rows":1,"cols":2,"entries":[[5,"-7"]]})") == IntMatrix::from_rows({{5, -7}}));
    IntMatrix big(1, 1);
    big(0, 0) = Integer("123456789012345678901234567890");
    CHECK(matrix_from_json(matrix_to_json(big)) == big);
    for (const char* bad : {"{", R"({"rows":2,"cols":1,"entries":[["1"]]})", R"({"rows":1,"cols":1,"entries":[["x"]]})",
                            R"({"rows":1,"cols":1,"entries":[[1.5]]})"})
        CHECK_THROWS_AS(matrix_from_json(bad), Error);
}

TEST_CASE("configurations and firing records") {
    auto m = IntMatrix::from_rows({{2, -1}, {-1, 2}});
    auto [m2, v] = config_from_json(config_to_json(m, iv({3, 0})));
    CHECK(m2 == m);
    CHECK(v == iv({3, 0}));
    FiringRecord r{{2, 0, 2}, iv({1, 0, 2})};
    auto text = firing_record_to_json(r);
    CHECK(text == R"({"counts":["1","0","2"],"sequence":[3,1,3]})");
    auto back = firing_record_from_json(text);
    CHECK(back.sequence == r.sequence);
    CHECK(back.counts == r.counts);
    CHECK_THROWS_AS(firing_record_from_json(R"({"counts":[],"sequence":[0]})"), Error);
}

TEST_CASE("text input") {
    auto m = IntMatrix::from_rows({{3, 0, -1}, {0, 3, -1}, {-1, -1, 1}});
    CHECK(matrix_from_text("3 0 -1; 0 3 -1; -1 -1 1") == m);
    CHECK(matrix_from_text("3 0 -1\n0 3 -1\n-1 -1 1\n") == m);
    CHECK(matrix_from_text("[[3,0,-1],[0,3,-1],[-1,-1,1]]") == m);
    CHECK(matrix_from_text(matrix_to_json(m)) == m);
    CHECK(vector_from_text("2,2,1") == iv({2, 2, 1}));
    CHECK(vector_from_text("[2, 2, 1]") == iv({2, 2, 1}));
    CHECK(vector_from_text("-4") == iv({-4}));
    for (const char* bad : {"1 2; 3", "", "a b"}) CHECK_THROWS_AS(matrix_from_text(bad), Error);
    for (const char* bad : {"1,,2", "x", "1.5"}) CHECK_THROWS_AS(vector_from_text(bad), Error);
}
