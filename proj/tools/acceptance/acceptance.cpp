#include "critlib_acceptance/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "critlib/chipfire.hpp"
#include "critlib/errors.hpp"
#include "critlib/intlinalg.hpp"
#include "critlib/mckay.hpp"
#include "critlib/rootsys.hpp"

namespace critlib::acceptance {

namespace {

class Check {
public:
    explicit Check(CriterionResult& r) : r_(r) {}
    bool operator()(bool ok, const std::string& what) {
        if (!ok) r_.failures.push_back(what);
        return ok;
    }
    void note(const std::string& s) { r_.notes.push_back(s); }

private:
    CriterionResult& r_;
};

IntVector iv(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

std::vector<DynkinType> irreducible_types(int max_classical) {
    std::vector<DynkinType> out;
    for (char f : {'A', 'B', 'C', 'D'})
        for (int l = 1; l <= max_classical; ++l) {
            if ((f == 'B' && l < 2) || (f == 'C' && l < 3) || (f == 'D' && l < 4)) continue;
            out.push_back({f, l});
        }
    out.push_back({'E', 6});
    out.push_back({'E', 7});
    out.push_back({'E', 8});
    out.push_back({'F', 4});
    out.push_back({'G', 2});
    return out;
}

std::vector<std::string> sl2_groups() {
    std::vector<std::string> g;
    for (int m = 2; m <= 12; ++m) g.push_back("cyclic-" + std::to_string(m));
    for (int m = 2; m <= 8; ++m) g.push_back("binary-dihedral-" + std::to_string(m));
    g.push_back("binary-tetrahedral");
    g.push_back("binary-octahedral");
    g.push_back("binary-icosahedral");
    return g;
}

AbelianGroupInvariants expected_sl2_group(const std::string& name) {
    auto tail = [&](std::size_t k) { return std::stol(name.substr(k)); };
    if (name.rfind("cyclic-", 0) == 0) return AbelianGroupInvariants::from_cyclic_factors({Integer(tail(7))});
    if (name.rfind("binary-dihedral-", 0) == 0)
        return tail(16) % 2 ? AbelianGroupInvariants::from_cyclic_factors({4})
                            : AbelianGroupInvariants::from_cyclic_factors({2, 2});
    if (name == "binary-tetrahedral") return AbelianGroupInvariants::from_cyclic_factors({3});
    if (name == "binary-octahedral") return AbelianGroupInvariants::from_cyclic_factors({2});
    return {};
}

// The four small systems named by criteria 6 and 7.
std::vector<std::pair<std::string, ChipSystem>> small_systems() {
    std::vector<std::pair<std::string, ChipSystem>> out;
    for (const char* t : {"A3", "B2", "G2"})
        out.emplace_back(std::string("Cartan(") + t + ")", ChipSystem::certify(cartan_matrix(DynkinType::parse(t))));
    out.emplace_back("McKay(A4)", certify_avalanche_finite_mckay(mckay_cartan(load_group("A4"))));
    return out;
}

// ------------------------------------------------------------------ 1
void cartan_minuscule(Check& check) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0;
    for (const auto& t : irreducible_types(10)) {
        auto r = verify_theorem_1_1(t);
        ++n;
        check(r.superstables_match, t.to_string() + ": superstables differ from {0} and the minuscule e_i");
        check(r.recurrents_match, t.to_string() + ": recurrents differ from {1} and 1 - e_i");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check(s < 30.0, "suite took " + std::to_string(s) + " s, budget 30 s");
    check.note(std::to_string(n) + " irreducible types");
}

// ------------------------------------------------------------------ 2
void a4_golden(Check& check) {
    auto d = mckay_cartan(load_group("A4"));
    check(d.M == IntMatrix::from_rows({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 2}}), "M differs");
    check(d.C_ext == IntMatrix::from_rows({{3, 0, 0, -1}, {0, 3, 0, -1}, {0, 0, 3, -1}, {-1, -1, -1, 1}}), "C~ differs");
    check(d.C == IntMatrix::from_rows({{3, 0, -1}, {0, 3, -1}, {-1, -1, 1}}), "C differs");
    auto sys = certify_avalanche_finite_mckay(d);
    check(sys.vC() == iv({2, 2, 0}), "v^C differs");
    auto rec = sys.recurrent_representatives();
    std::set<IntVector> rec_set(rec.begin(), rec.end());
    check(rec.size() == 3 && rec_set == std::set<IntVector>{iv({2, 2, 0}), iv({1, 2, 0}), iv({2, 1, 0})},
          "recurrents differ from the printed table");
    auto sup = sys.superstable_representatives();
    std::set<IntVector> sup_set(sup.begin(), sup.end());
    check(sup.size() == 3 && sup_set == std::set<IntVector>{iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0})},
          "superstables differ from the printed table");
    check(critical_group(d).to_string() == "Z/3", "critical group is not Z/3");
    auto s = sys.stabilize(iv({2, 2, 1}));
    check(s.stable == iv({2, 2, 0}), "stab([2,2,1]) = " + to_string(s.stable));
    check(s.record.sequence.size() == 5, "stabilization used " + std::to_string(s.record.sequence.size()) + " firings");
    check(s.record.counts == iv({1, 1, 3}), "firing counts " + to_string(s.record.counts));
}

// ------------------------------------------------------------------ 3, 4
// E6 toppling cycle, v1..v6 (display: top row is node 2, bottom row nodes 1,3,4,5,6).
const std::vector<IntVector>& e6_printed_states() {
    static const std::vector<IntVector> s = {
        iv({0, 1, 1, 1, 1, 1}), iv({0, 2, 1, 1, 1, 1}), iv({0, 0, 1, 2, 1, 1}), iv({0, 1, 2, 0, 2, 1}),
        iv({1, 1, 0, 1, 2, 1}), iv({1, 1, 0, 2, 0, 2}), iv({1, 1, 0, 2, 1, 0}), iv({1, 2, 1, 0, 2, 0}),
        iv({1, 2, 1, 1, 0, 1}), iv({1, 0, 1, 2, 0, 1}), iv({1, 1, 2, 0, 1, 1}), iv({2, 1, 0, 1, 1, 1}),
    };
    return s;
}

// E6 padded looping states, [u0, u1, ..., u6].
const std::vector<IntVector>& e6_printed_padded() {
    static const std::vector<IntVector> s = {
        iv({-1, 1, 0, 0, 0, 0, 0}),  iv({1, 1, -1, 0, 0, 0, 0}),  iv({0, 1, 1, 0, -1, 0, 0}),
        iv({0, 1, 0, -1, 1, -1, 0}), iv({0, 0, 0, 1, 0, -1, 0}),  iv({0, 0, 0, 1, -1, 1, -1}),
        iv({0, 0, 0, 1, -1, 0, 1}),  iv({0, 0, -1, 0, 1, -1, 1}), iv({0, 0, -1, 0, 0, 1, 0}),
        iv({-1, 0, 1, 0, -1, 1, 0}), iv({-1, 0, 0, -1, 1, 0, 0}), iv({-1, -1, 0, 1, 0, 0, 0}),
    };
    return s;
}

// C4 padded looping states, printed as [u1..u4 | u0]; stored here as [u0, u1..u4].
const std::vector<IntVector>& c4_printed_padded() {
    static const std::vector<IntVector> s = {
        iv({-1, 1, 0, 0, 0}), iv({1, 1, -1, 0, 0}), iv({0, 0, 1, -1, 0}),  iv({0, 0, 0, 1, -1}),
        iv({0, 0, 0, -1, 1}), iv({0, 0, -1, 1, 0}), iv({-1, -1, 1, 0, 0}), iv({-1, 1, 0, 0, 0}),
    };
    return s;
}

// Node fired between two consecutive toppling states, or nullopt.
std::optional<std::size_t> fired_between(const IntMatrix& c, const IntVector& a, const IntVector& b) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < c.rows(); ++i)
        if (sub(a, c.row(i)) == b) {
            if (found) return std::nullopt;
            found = i;
        }
    return found;
}

std::vector<std::size_t> e6_printed_order(const RootSystemData& e6) {
    const auto& s = e6_printed_states();
    std::vector<std::size_t> order;
    for (std::size_t k = 1; k < s.size(); ++k) {
        auto i = fired_between(e6.cartan, s[k], k + 1 < s.size() ? s[k + 1] : s[0]);
        if (!i) throw Error(ErrorCode::InvalidToppling, "printed states " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                                            " are not one toppling apart");
        order.push_back(*i);
    }
    return order;
}

void e6_cycle(Check& check) {
    auto e6 = RootSystemData::build(DynkinType::parse("E6"));
    check(e6.cartan == IntMatrix::from_rows({{2, 0, -1, 0, 0, 0},
                                             {0, 2, 0, -1, 0, 0},
                                             {-1, 0, 2, -1, 0, 0},
                                             {0, -1, -1, 2, -1, 0},
                                             {0, 0, 0, -1, 2, -1},
                                             {0, 0, 0, 0, -1, 2}}),
          "E6 Cartan matrix differs from the printed one");
    check(e6.coxeter_number == 12, "Coxeter number is not 12");
    check(e6.highest().simple == iv({1, 2, 2, 3, 2, 1}), "highest root differs");
    check(e6.highest_short().weight == iv({0, 1, 0, 0, 0, 0}), "alpha* is not lambda_2");
    auto order = e6_printed_order(e6);
    auto loop = minuscule_toppling_and_looping(e6, 0, order);
    const auto& s = e6_printed_states();
    check(loop.start == s[0], "rho - lambda differs");
    // states: rho - lambda, then the toppling sequence ending back at rho - lambda
    std::vector<IntVector> states{loop.start};
    states.insert(states.end(), loop.toppling.begin(), loop.toppling.end() - 1);
    check(states.size() == 12, "cycle has " + std::to_string(states.size()) + " states");
    check(states == s, "toppling states differ from the printed sequence");
    check(loop.toppling.back() == loop.start, "cycle does not close");
    check(std::set<IntVector>(states.begin(), states.end()).size() == 12, "states are not distinct");
    auto def = minuscule_toppling_and_looping(e6, 0);
    check(def.fired.size() == loop.fired.size() && def.toppling.back() == loop.toppling.back(),
          "default firing order gives a different cycle length");
    std::ostringstream os;
    for (auto i : order) os << (os.tellp() ? "," : "") << i + 1;
    check.note("printed firing order " + os.str());
}

void looping(Check& check) {
    auto e6 = RootSystemData::build(DynkinType::parse("E6"));
    auto le = minuscule_toppling_and_looping(e6, 0, e6_printed_order(e6));
    std::vector<IntVector> expected = e6_printed_padded();
    expected.push_back(expected.front());
    check(le.padded == expected, "E6 padded looping sequence differs from the printed one");
    check(le.padding == iv({1, 1, 2, 2, 3, 2, 1}), "E6 padding vector differs");

    auto c4 = RootSystemData::build(DynkinType::parse("C4"));
    check(c4.cartan.transpose() == cartan_matrix(DynkinType::parse("B4")), "dual of C4 is not B4");
    auto lc = minuscule_toppling_and_looping(c4, 0);
    check(lc.padded == c4_printed_padded(), "C4 padded looping sequence differs from the printed one");
    std::vector<std::size_t> want{1, 2, 3, 2, 1, 0};
    check(lc.fired == want, "C4 firing order differs");
    check(lc.padding == iv({1, 1, 2, 2, 2}), "C4 padding vector differs from [1, 2, 2, 2] coroot coefficients");

    for (const auto* l : {&le, &lc}) {
        for (const auto& u : l->padded) check(sgn(dot(l->padding, u)) == 0, "padded state " + to_string(u) + " leaves phi-perp");
        check(is_zero(l->game_matrix.apply(l->padding)), "padding is not in the kernel of the game matrix");
    }
}

// ------------------------------------------------------------------ 5
void sl2_critical_groups(Check& check) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& g : sl2_groups()) {
        auto d = mckay_cartan(load_group(g));
        check(is_in_SL(d), g + ": gamma is not in SL2");
        auto k = critical_group(d);
        auto want = expected_sl2_group(g);
        check(k == want, g + ": critical group " + k.to_string() + ", expected " + want.to_string());
        auto lin = linear_characters(*d.table).invariants;
        check(k == lin, g + ": degree-1 character group is " + lin.to_string());
        check(abelianization_map(d).isomorphism, g + ": abelianization map is not an isomorphism");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check(s < 20.0, "suite took " + std::to_string(s) + " s, budget 20 s");
}

// ------------------------------------------------------------------ 6
void burning(Check& check) {
    std::vector<std::pair<std::string, std::pair<ChipSystem, IntVector>>> systems;
    for (auto& [name, sys] : small_systems()) {
        IntVector b;
        if (name == "McKay(A4)") {
            b = burning_config_b0(mckay_cartan(load_group("A4"))).b;
        } else {
            auto t = name.substr(7, name.size() - 8);
            b = RootSystemData::build(DynkinType::parse(t)).highest().weight;
        }
        systems.push_back({name, {sys, b}});
    }
    // larger Cartan systems on top of the four named ones
    for (const char* t : {"A5", "D5", "B4", "C4", "F4", "E6", "E7"}) {
        auto d = RootSystemData::build(DynkinType::parse(t));
        systems.push_back({std::string("Cartan(") + t + ")", {ChipSystem::certify(d.cartan), d.highest().weight}});
    }
    std::size_t total = 0;
    for (auto& [name, pair] : systems) {
        auto& [sys, b] = pair;
        auto cert = sys.check_burning(b);
        for (const auto& v : sys.stable_configurations()) {
            ++total;
            bool a = sys.is_recurrent(v);
            auto verdict = sys.recurrent_test_via_burning(cert, v);
            check(a == verdict.recurrent, name + ": verdicts differ at " + to_string(v));
            if (a) check(verdict.counts_match, name + ": burning firing counts differ from z at " + to_string(v));
        }
    }
    check.note(std::to_string(total) + " stable configurations compared");
}

// ------------------------------------------------------------------ 7
void energy(Check& check) {
    std::size_t compared = 0;
    for (auto& [name, sys] : small_systems()) {
        const std::size_t l = sys.size();
        for (const auto& u : sys.superstable_representatives()) {
            const Rational eu = sys.energy(u);
            IntVector z(l, -3);
            while (true) {
                if (!is_zero(z)) {
                    IntVector w = add(u, sys.transpose().apply(z));
                    if (is_nonnegative(w)) {
                        ++compared;
                        check(eu < sys.energy(w), name + ": E(" + to_string(u) + ") is not below E(" + to_string(w) + ")");
                    }
                }
                std::size_t i = 0;
                while (i < l && z[i] == 3) z[i++] = -3;
                if (i == l) break;
                ++z[i];
            }
        }
    }
    check.note(std::to_string(compared) + " alternative representatives compared");
}

// ------------------------------------------------------------------ 8
void extended_cokernels(Check& check) {
    std::size_t n = 0;
    for (const auto& t : irreducible_types(10)) {
        auto d = RootSystemData::build(t);
        for (const IntMatrix* m : {&d.extended_cartan}) {
            auto r = extended_cokernel_relations(*m);
            ++n;
            check(r.hypotheses_hold() && r.relations_hold(), "extended Cartan " + t.to_string() + " fails");
        }
    }
    for (const auto& g : bundled_groups()) {
        auto table = load_group(g.name);
        if (!table->natural_gamma) continue;
        auto d = mckay_cartan(table);
        auto r = extended_cokernel_relations(d.C_ext);
        ++n;
        check(r.hypotheses_hold() && r.relations_hold(), "extended McKay-Cartan " + g.name + " fails");
    }
    auto bad = extended_cokernel_relations(IntMatrix::from_rows({{30, -15}, {-20, 10}}));
    check(!bad.hypotheses_hold(), "[[30,-15],[-20,10]] reported as satisfying the unit hypotheses");
    check(!bad.relations_hold(), "[[30,-15],[-20,10]] reported as satisfying the relations");
    check.note(std::to_string(n) + " extended matrices; counterexample coker(C^t) = " + bad.coker_t.to_string() +
               ", coker(C~^t) = " + bad.coker_ext_t.to_string());
}

// ------------------------------------------------------------------ 9
Integer binomial(unsigned m, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

void rng_golden(Check& check) {
    {
        auto d = mckay_cartan(load_group("A4"));
        RepresentationRng rng(d);
        IntVector u = rng.generators()[0];
        check(u == iv({-1, 1, 0, 0}), "A4: u is not e1 - e0");
        check(!rng.is_zero(u), "A4: u is zero");
        check(rng.is_zero(scale(3, u)), "A4: 3u != 0");
        check(rng.is_zero(rng.multiply(u, u)), "A4: u^2 != 0");
        check(rng.ideal_invariants().to_string() == "Z/3", "A4: I(gamma) is not Z/3");
    }
    for (unsigned m = 2; m <= 9; ++m) {
        auto d = mckay_cartan(load_group("cyclic-" + std::to_string(m)));
        RepresentationRng rng(d);
        IntVector u = rng.generators()[0];
        const std::string tag = "Z/" + std::to_string(m) + ": ";
        check(rng.is_zero(scale(m, u)), tag + "mu != 0");
        for (unsigned k = 1; k < m; ++k) check(!rng.is_zero(scale(k, u)), tag + "u has order below m");
        check(rng.is_zero(rng.multiply(u, u)), tag + "u^2 != 0");
        check(rng.ideal_invariants() == AbelianGroupInvariants::from_cyclic_factors({Integer(m)}), tag + "I(gamma) is not Z/m");
    }
    for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 3}, {2, 4}}) {
        auto table = load_group("cyclic-" + std::to_string(m));
        VirtualCharacter gamma(m, 0);
        gamma[1] = n;
        auto d = mckay_cartan(table, gamma);
        RepresentationRng rng(d);
        IntVector u = rng.generators()[0];
        const std::string tag = "Z/" + std::to_string(m) + ", " + std::to_string(n) + "chi1: ";
        IntVector want_factors(m - 1, Integer(n));
        check(rng.ideal_invariants() == AbelianGroupInvariants::from_cyclic_factors(want_factors),
              tag + "I(gamma) = " + rng.ideal_invariants().to_string());
        check(rng.is_zero(scale(n, u)), tag + "nu != 0");
        IntVector rhs(m, 0);
        for (unsigned k = 1; k < m; ++k) rhs = sub(rhs, scale(binomial(m, k), rng.power(u, k)));
        check(rng.equal(rng.power(u, m), rhs), tag + "u^m relation fails");
    }
}

// ------------------------------------------------------------------ 10
void cayley(Check& check) {
    std::mt19937 gen(20240610);
    const std::vector<IntVector> groups = {
        iv({2}),  iv({3}),  iv({4}),  iv({5}),     iv({6}),     iv({7}),     iv({8}),     iv({9}),
        iv({10}), iv({12}), iv({16}), iv({24}),    iv({2, 2}),  iv({2, 4}),  iv({3, 3}),  iv({2, 6}),
        iv({4, 4}), iv({2, 8}), iv({2, 2, 2}), iv({2, 2, 4}), iv({2, 2, 2, 2}), iv({2, 12}), iv({3, 6})};
    std::size_t r2 = 0, r3 = 0;
    for (int trial = 0; trial < 20; ++trial) {
        IntVector inv;
        bool cyclic_pair = trial % 4 == 0;
        do {
            inv = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(gen)];
        } while (cyclic_pair && inv.size() != 1);
        auto elems = abelian_elements(inv);
        auto reduce = [&](IntVector v) {
            for (std::size_t i = 0; i < v.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), inv[i].get_mpz_t());
            return v;
        };
        std::vector<IntVector> gens;
        if (cyclic_pair) {
            std::vector<long> units;
            long m = inv[0].get_si();
            for (long a = 1; a < m; ++a)
                if (std::gcd(a, m) == 1) units.push_back(a);
            long g = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(gen)];
            gens = {iv({g}), iv({m - g})};
        } else {
            while (true) {
                std::size_t r = std::uniform_int_distribution<std::size_t>(3, 5)(gen);
                gens.clear();
                IntVector sum(inv.size(), 0);
                for (std::size_t k = 0; k + 1 < r; ++k) {
                    gens.push_back(elems[std::uniform_int_distribution<std::size_t>(1, elems.size() - 1)(gen)]);
                    sum = add(sum, gens.back());
                }
                IntVector last = reduce(scale(-1, sum));
                if (is_zero(last)) continue;
                gens.push_back(last);
                try {
                    cayley_digraph_check(inv, gens);
                    break;
                } catch (const Error&) {
                }
            }
        }
        auto rep = cayley_digraph_check(inv, gens);
        const std::string tag = "A = " + AbelianGroupInvariants::from_cyclic_factors(inv).to_string() + ", r = " +
                                std::to_string(rep.r) + ": ";
        check(rep.laplacian_matches_mckay, tag + "Laplacian differs from the McKay-Cartan matrix");
        if (rep.r == 2) {
            ++r2;
            check(rep.arborescences == rep.group_order, tag + "arborescences " + rep.arborescences.get_str() + " != |A|");
        } else {
            ++r3;
            check(rep.arborescences > rep.group_order, tag + "arborescences " + rep.arborescences.get_str() + " <= |A|");
        }
        check(rep.passed, tag + "report did not pass");
    }
    check.note(std::to_string(r2) + " cyclic +-g pairs, " + std::to_string(r3) + " multisets with r >= 3");
}

// ------------------------------------------------------------------ 11
bool unimodular(const IntMatrix& u) { return abs(determinant(u)) == 1; }

void properties(Check& check) {
    std::mt19937 gen(11);
    auto draw = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    for (int t = 0; t < 200; ++t) {
        std::size_t r = draw(1, 6), c = draw(1, 6);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = draw(-3, 3) * (draw(0, 3) ? 1 : draw(-9, 9));
        auto snf = smith_normal_form(a);
        const std::string tag = "SNF of " + to_string(a) + ": ";
        check(unimodular(snf.U) && unimodular(snf.V), tag + "U or V not unimodular");
        check(snf.U * a * snf.V == snf.S, tag + "U A V != S");
        auto diag = snf.diagonal();
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && sgn(snf.S(i, j)) != 0) ok = false;
        for (std::size_t k = 0; k < diag.size(); ++k) {
            if (sgn(diag[k]) < 0) ok = false;
            if (k + 1 < diag.size() && sgn(diag[k]) != 0 && diag[k + 1] % diag[k] != 0) ok = false;
            if (k + 1 < diag.size() && sgn(diag[k]) == 0 && sgn(diag[k + 1]) != 0) ok = false;
        }
        check(ok, tag + "S is not in Smith form");
    }

    auto systems = small_systems();
    systems.emplace_back("Cartan(E6)", ChipSystem::certify(cartan_matrix(DynkinType::parse("E6"))));
    for (auto& [name, sys] : systems) {
        const std::size_t l = sys.size();
        for (int t = 0; t < 100; ++t) {
            IntVector v(l);
            for (auto& x : v) x = draw(0, 40);
            auto q = sys.stabilize(v, FiringStrategy::Queue);
            auto m = sys.stabilize(v, FiringStrategy::MaxSurplus);
            check(q.stable == m.stable && q.record.counts == m.record.counts,
                  name + ": strategies disagree on " + to_string(v));
            check(sub(v, sys.transpose().apply(q.record.counts)) == q.stable, name + ": firing-count identity fails");
        }
        for (int t = 0; t < 50; ++t) {
            IntVector v(l);
            for (std::size_t i = 0; i < l; ++i) v[i] = draw(0, sys.diag()[i].get_si() - 1);
            std::size_t i = draw(0, l - 1), j = draw(0, l - 1);
            check(sys.avalanche_op(sys.avalanche_op(v, i), j) == sys.avalanche_op(sys.avalanche_op(v, j), i),
                  name + ": avalanche operators do not commute on " + to_string(v));
        }
    }
}

struct Entry {
    CriterionInfo info;
    std::function<void(Check&)> run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {{1, "Cartan superstables and recurrents for every irreducible type", {"rootsys", "chipfire"}}, cartan_minuscule},
        {{2, "A4 McKay golden matrices, configurations and stabilization", {"mckay", "chipfire"}}, a4_golden},
        {{3, "E6 toppling cycle from (rho - lambda_1) + alpha*", {"rootsys"}}, e6_cycle},
        {{4, "E6 and C4 padded numbers-game looping sequences", {"rootsys"}}, looping},
        {{5, "Critical groups of finite subgroups of SL2", {"mckay"}}, sl2_critical_groups},
        {{6, "Burning test agrees with the recurrence test", {"chipfire"}}, burning},
        {{7, "Superstables strictly minimize energy in their coset", {"chipfire"}}, energy},
        {{8, "Extended cokernel relations on the catalog", {"chipfire", "rootsys", "mckay"}}, extended_cokernels},
        {{9, "Representation rng golden examples", {"mckay"}}, rng_golden},
        {{10, "Cayley digraph arborescence counts", {"mckay"}}, cayley},
        {{11, "SNF, confluence and commutativity properties", {"intlinalg", "chipfire"}}, properties},
    };
    return e;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
    static const std::vector<CriterionInfo> c = [] {
        std::vector<CriterionInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return c;
}

std::vector<int> select_criteria(const std::vector<std::string>& selectors) {
    std::vector<int> ids;
    for (const auto& c : criteria()) {
        bool take = selectors.empty();
        for (const auto& s : selectors) {
            if (s == std::to_string(c.id) || std::find(c.tags.begin(), c.tags.end(), s) != c.tags.end()) take = true;
        }
        if (take) ids.push_back(c.id);
    }
    for (const auto& s : selectors) {
        bool known = false;
        for (const auto& c : criteria())
            if (s == std::to_string(c.id) || std::find(c.tags.begin(), c.tags.end(), s) != c.tags.end()) known = true;
        if (!known) throw Error(ErrorCode::InvalidArgument, "unknown criterion or module '" + s + "'");
    }
    return ids;
}

CriterionResult run_criterion(int id) {
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        CriterionResult r;
        r.id = id;
        r.name = e.info.name;
        Check check(r);
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(check);
        } catch (const std::exception& ex) {
            r.failures.push_back(std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.passed = r.failures.empty();
        return r;
    }
    throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

}  // namespace critlib::acceptance
