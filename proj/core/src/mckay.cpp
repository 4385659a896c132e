#include "critlib/mckay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "critlib/errors.hpp"

namespace critlib {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Inner product <a, b> = (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner(const CharacterTable& t, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    Cyclotomic s(t.exponent);
    for (std::size_t c = 0; c < t.num_classes(); ++c) s += a[c] * b[c].conj() * Rational(t.classes[c].size);
    s *= Rational(1) / Rational(t.group_order);
    return s;
}

Integer as_integer(const Cyclotomic& v, const std::string& what) {
    if (!v.is_integer()) throw Error(ErrorCode::NotIntegral, what + " is not an integer");
    return v.rational_value().get_num();
}

std::size_t find_row(const CharacterTable& t, const std::vector<Cyclotomic>& values) {
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
        if (t.characters[i] == values) return i;
    return t.num_irreducibles();
}

unsigned element_order(const IntVector& x, unsigned modulus) {
    Integer g = modulus;
    for (const auto& v : x) g = gcd(g, v);
    return static_cast<unsigned>(Integer(modulus / g).get_ui());
}

// Invariant factors of a finite abelian group from its multiset of element orders.
AbelianGroupInvariants invariants_from_orders(const std::vector<unsigned>& orders) {
    std::set<unsigned> primes;
    for (unsigned o : orders) {
        unsigned m = o;
        for (unsigned p = 2; p * p <= m; ++p)
            while (m % p == 0) { primes.insert(p); m /= p; }
        if (m > 1) primes.insert(m);
    }
    IntVector factors;
    for (unsigned p : primes) {
        // a[k] = log_p #{x : p^k x = 0}
        std::size_t p_power_count = 0;
        for (unsigned o : orders) {
            unsigned m = o;
            while (m % p == 0) m /= p;
            if (m == 1) ++p_power_count;
        }
        std::vector<unsigned> a{0};
        for (unsigned pk = p;; pk *= p) {
            std::size_t count = 0;
            for (unsigned o : orders)
                if (pk % o == 0) ++count;
            unsigned e = 0;
            for (std::size_t c = count; c > 1; c /= p) ++e;
            a.push_back(e);
            if (count == p_power_count) break;
        }
        // number of cyclic p-factors of order >= p^k is a[k] - a[k-1]
        for (std::size_t k = 1; k < a.size(); ++k) {
            unsigned exact = (a[k] - a[k - 1]) - (k + 1 < a.size() ? a[k + 1] - a[k] : 0);
            Integer q = 1;
            for (std::size_t j = 0; j < k; ++j) q *= p;
            for (unsigned j = 0; j < exact; ++j) factors.push_back(q);
        }
    }
    return AbelianGroupInvariants::from_cyclic_factors(factors);
}

IntVector mod_vec(IntVector v, unsigned modulus) {
    for (auto& x : v) mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), modulus);
    return v;
}

bool leading_minors_positive(const IntMatrix& s) {
    for (std::size_t k = 1; k <= s.rows(); ++k) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = s(i, j);
        if (sgn(determinant(m)) <= 0) return false;
    }
    return true;
}

}  // namespace

IntMatrix tensor_multiplicities(const CharacterTable& table, const VirtualCharacter& gamma) {
    for (const auto& g : gamma)
        if (sgn(g) < 0) throw Error(ErrorCode::InvalidArgument, "gamma must be a genuine character");
    auto gv = table.evaluate(gamma);
    const std::size_t r = table.num_irreducibles();
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Cyclotomic> prod(table.num_classes(), Cyclotomic(table.exponent));
        for (std::size_t c = 0; c < table.num_classes(); ++c) prod[c] = gv[c] * table.characters[i][c];
        for (std::size_t j = 0; j < r; ++j) {
            Integer v = as_integer(inner(table, prod, table.characters[j]), "multiplicity m_" + idx(i) + idx(j));
            if (sgn(v) < 0) throw Error(ErrorCode::CorruptTable, "negative tensor multiplicity");
            m(i, j) = v;
        }
    }
    return m;
}

McKayData mckay_cartan(std::shared_ptr<const CharacterTable> table, const VirtualCharacter& gamma) {
    if (!table) throw Error(ErrorCode::InvalidArgument, "no character table");
    McKayData d;
    d.table = table;
    d.gamma = gamma;
    d.M = tensor_multiplicities(*table, gamma);
    d.delta_e = table->degrees();
    d.n = dot(gamma, d.delta_e);
    const std::size_t r = table->num_irreducibles();
    d.C_ext = IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) d.C_ext(i, j) = (i == j ? d.n : Integer(0)) - d.M(i, j);
    d.C = strike(d.C_ext, 0);
    d.gamma_values = table->evaluate(gamma);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Cyclotomic> conj;
        for (const auto& v : table->characters[i]) conj.push_back(v.conj());
        std::size_t j = find_row(*table, conj);
        if (j == r) throw Error(ErrorCode::CorruptTable, "dual of character " + idx(i) + " is not in the table");
        d.dual_involution.push_back(j);
    }
    if (!eigenvector_equations_hold(d)) throw Error(ErrorCode::CorruptTable, "eigenvector equations fail");
    return d;
}

McKayData mckay_cartan(std::shared_ptr<const CharacterTable> table) {
    if (!table) throw Error(ErrorCode::InvalidArgument, "no character table");
    if (!table->natural_gamma) throw Error(ErrorCode::InvalidArgument, table->name + " has no natural representation");
    return mckay_cartan(table, *table->natural_gamma);
}

Faithfulness is_faithful(const CharacterTable& table, const VirtualCharacter& gamma) {
    auto gv = table.evaluate(gamma);
    Integer n = dot(gamma, table.degrees());
    Faithfulness f;
    for (std::size_t c = 0; c < table.num_classes(); ++c)
        if (gv[c] == Rational(n)) f.kernel_classes.push_back(c);
    f.faithful = f.kernel_classes.size() == 1;
    return f;
}

bool eigenvector_equations_hold(const McKayData& d) {
    const auto& t = *d.table;
    const std::size_t r = t.num_irreducibles();
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        Cyclotomic lambda = Cyclotomic(t.exponent, Rational(d.n)) - d.gamma_values[c];
        for (std::size_t i = 0; i < r; ++i) {
            Cyclotomic lhs(t.exponent);
            for (std::size_t j = 0; j < r; ++j)
                if (sgn(d.C_ext(i, j)) != 0) lhs += t.characters[j][c] * Rational(d.C_ext(i, j));
            if (!(lhs == lambda * t.characters[i][c])) return false;
        }
    }
    return true;
}

bool dual_symmetry_holds(const McKayData& d) {
    const std::size_t r = d.C_ext.rows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (d.C_ext(i, j) != d.C_ext(d.dual_involution[j], d.dual_involution[i])) return false;
    return true;
}

bool linear_twist_symmetry_holds(const McKayData& d) {
    const auto& t = *d.table;
    const std::size_t r = t.num_irreducibles();
    for (std::size_t l = 0; l < r; ++l) {
        if (t.degree(l) != 1) continue;
        std::vector<std::size_t> phi;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Cyclotomic> prod;
            for (std::size_t c = 0; c < t.num_classes(); ++c) prod.push_back(t.characters[i][c] * t.characters[l][c]);
            std::size_t k = find_row(t, prod);
            if (k == r) return false;
            phi.push_back(k);
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (d.C_ext(i, j) != d.C_ext(phi[i], phi[j])) return false;
    }
    return true;
}

ChipSystem certify_avalanche_finite_mckay(const McKayData& d) {
    ChipSystem sys = ChipSystem::certify(d.C);
    IntMatrix s = d.C + d.C.transpose();
    if (!leading_minors_positive(s))
        throw Error(ErrorCode::NotAvalancheFinite, "C + C^t is not positive definite");
    return sys;
}

bool CriticalGroupPresentations::agree() const {
    if (!(coker_t == perp_quotient && coker_t == alternate)) return false;
    AbelianGroupInvariants expected = coker_t;
    expected.free_rank += 1;
    return coker_ext_t == expected;
}

CriticalGroupPresentations critical_group_presentations(const McKayData& d) {
    CriticalGroupPresentations p;
    IntMatrix ct = d.C_ext.transpose();
    p.coker_t = cokernel_invariants(d.C.transpose());
    p.perp_quotient = perp_quotient_invariants(d.delta_e, ct);
    const std::size_t r = ct.rows();
    IntMatrix alt(r, r + 1);
    alt(0, 0) = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) alt(i, j + 1) = ct(i, j);
    p.alternate = cokernel_invariants(alt);
    p.coker_ext_t = cokernel_invariants(ct);
    return p;
}

AbelianGroupInvariants critical_group(const McKayData& d) {
    auto p = critical_group_presentations(d);
    if (!p.agree())
        throw Error(ErrorCode::PresentationsDisagree,
                    "coker(C^t) = " + p.coker_t.to_string() + ", perp quotient = " + p.perp_quotient.to_string() +
                        ", alternate = " + p.alternate.to_string() + ", coker(C~^t) = " + p.coker_ext_t.to_string());
    return p.coker_t;
}

BurningCertificate burning_config_b0(const McKayData& d) {
    ChipSystem sys = certify_avalanche_finite_mckay(d);
    IntVector b0;
    for (std::size_t j = 1; j < d.M.cols(); ++j) b0.push_back(d.M(0, j));
    BurningCertificate cert = sys.check_burning(b0);
    Integer total = 0, expected = 0;
    for (const auto& z : cert.z) total += z;
    for (std::size_t i = 1; i < d.delta_e.size(); ++i) expected += d.delta_e[i];
    if (total != expected)
        throw Error(ErrorCode::VerificationFailed, "b0 firing total " + total.get_str() + ", expected " + expected.get_str());
    return cert;
}

std::size_t LinearCharacters::find(const IntVector& exponent) const {
    IntVector e = mod_vec(exponent, modulus);
    for (std::size_t k = 0; k < exponents.size(); ++k)
        if (exponents[k] == e) return k;
    return rows.size();
}

LinearCharacters linear_characters(const CharacterTable& t) {
    LinearCharacters lc;
    lc.modulus = t.exponent;
    std::vector<Cyclotomic> roots;
    for (unsigned k = 0; k < t.exponent; ++k) roots.push_back(Cyclotomic::root_of_unity(t.exponent, k));
    std::vector<unsigned> orders;
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
        if (t.degree(i) != 1) continue;
        IntVector e;
        for (const auto& v : t.characters[i]) {
            auto it = std::find(roots.begin(), roots.end(), v);
            if (it == roots.end()) throw Error(ErrorCode::CorruptTable, "linear character value is not a root of unity");
            e.push_back(static_cast<long>(it - roots.begin()));
        }
        lc.rows.push_back(i);
        orders.push_back(element_order(e, lc.modulus));
        lc.exponents.push_back(std::move(e));
    }
    lc.invariants = invariants_from_orders(orders);
    return lc;
}

std::size_t det_character(const CharacterTable& t, std::size_t chi) {
    const unsigned dg = static_cast<unsigned>(t.degree(chi).get_ui());
    std::vector<Cyclotomic> det;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
        std::vector<Cyclotomic> p(dg + 1, Cyclotomic(t.exponent)), e(dg + 1, Cyclotomic(t.exponent));
        for (unsigned k = 1; k <= dg; ++k) p[k] = t.characters[chi][t.power_class(c, k)];
        e[0] = Cyclotomic(t.exponent, 1);
        for (unsigned k = 1; k <= dg; ++k) {
            Cyclotomic s(t.exponent);
            for (unsigned i = 1; i <= k; ++i) {
                Cyclotomic term = e[k - i] * p[i];
                if (i % 2 == 1) s += term;
                else s -= term;
            }
            s *= Rational(1, k);
            e[k] = s;
        }
        det.push_back(e[dg]);
    }
    std::size_t row = find_row(t, det);
    if (row == t.num_irreducibles() || t.degree(row) != 1)
        throw Error(ErrorCode::NoMatchingLinearCharacter, "det of character " + idx(chi) + " matches no linear character");
    return row;
}

bool is_in_SL(const McKayData& d) {
    const auto& t = *d.table;
    IntVector total(t.num_classes(), 0);
    auto lc = linear_characters(t);
    for (std::size_t i = 0; i < d.gamma.size(); ++i) {
        if (sgn(d.gamma[i]) == 0) continue;
        std::size_t row = det_character(t, i);
        std::size_t k = std::find(lc.rows.begin(), lc.rows.end(), row) - lc.rows.begin();
        total = add(total, scale(d.gamma[i], lc.exponents[k]));
    }
    return is_zero(mod_vec(total, lc.modulus));
}

AbelianizationReport abelianization_map(const McKayData& d) {
    if (!is_in_SL(d)) throw Error(ErrorCode::InvalidArgument, "gamma does not have trivial determinant");
    const auto& t = *d.table;
    auto lc = linear_characters(t);
    AbelianizationReport rep;
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
        std::size_t row = det_character(t, i);
        rep.pi.push_back(row);
        std::size_t k = std::find(lc.rows.begin(), lc.rows.end(), row) - lc.rows.begin();
        images.push_back(lc.exponents[k]);
    }
    rep.e0_trivial = is_zero(mod_vec(images[0], lc.modulus));
    rep.kills_relations = true;
    const std::size_t r = d.C_ext.rows();
    for (std::size_t j = 0; j < r && rep.kills_relations; ++j) {
        IntVector s(t.num_classes(), 0);
        for (std::size_t i = 0; i < r; ++i)
            if (sgn(d.C_ext(j, i)) != 0) s = add(s, scale(d.C_ext(j, i), images[i]));
        rep.kills_relations = is_zero(mod_vec(s, lc.modulus));
    }
    if (!rep.e0_trivial || !rep.kills_relations)
        throw Error(ErrorCode::KernelCheckFailed, "det map does not vanish on e0 and im(C~^t)");

    std::set<IntVector> reached{mod_vec(IntVector(t.num_classes(), 0), lc.modulus)};
    std::vector<IntVector> frontier(reached.begin(), reached.end());
    while (!frontier.empty()) {
        IntVector x = frontier.back();
        frontier.pop_back();
        for (const auto& g : images) {
            IntVector y = mod_vec(add(x, g), lc.modulus);
            if (reached.insert(y).second) frontier.push_back(y);
        }
    }
    rep.surjective = reached.size() == lc.rows.size();
    rep.critical = critical_group(d);
    rep.linear_group = lc.invariants;
    rep.isomorphism = rep.surjective && rep.critical.finite() && rep.critical == rep.linear_group;
    return rep;
}

StructureConstants structure_constants(const CharacterTable& t) {
    const std::size_t r = t.num_irreducibles();
    StructureConstants n(r, std::vector<IntVector>(r, IntVector(r, 0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            std::vector<Cyclotomic> prod;
            for (std::size_t c = 0; c < t.num_classes(); ++c) prod.push_back(t.characters[i][c] * t.characters[j][c]);
            for (std::size_t k = 0; k < r; ++k) {
                Integer v = as_integer(inner(t, prod, t.characters[k]), "structure constant");
                n[i][j][k] = v;
                n[j][i][k] = v;
            }
        }
    return n;
}

RepresentationRng::RepresentationRng(const McKayData& d)
    : delta_(d.delta_e), c_ext_t_(d.C_ext.transpose()), quotient_(c_ext_t_), constants_(structure_constants(*d.table)) {}

IntVector RepresentationRng::lift_multiply(const IntVector& x, const IntVector& y) const {
    const std::size_t r = dimension();
    if (x.size() != r || y.size() != r) throw Error(ErrorCode::InvalidArgument, "element has wrong length");
    IntVector out(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (sgn(y[j]) == 0) continue;
            Integer c = x[i] * y[j];
            for (std::size_t k = 0; k < r; ++k)
                if (sgn(constants_[i][j][k]) != 0) out[k] += c * constants_[i][j][k];
        }
    }
    return out;
}

IntVector RepresentationRng::multiply(const IntVector& x, const IntVector& y) const {
    if (sgn(degree(x)) != 0 || sgn(degree(y)) != 0)
        throw Error(ErrorCode::NotDegreeZero, "rng product needs degree-0 factors");
    return reduce(lift_multiply(x, y));
}

IntVector RepresentationRng::power(const IntVector& x, unsigned k) const {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "the rng has no unit; power must be positive");
    if (sgn(degree(x)) != 0) throw Error(ErrorCode::NotDegreeZero, "rng power needs a degree-0 element");
    IntVector acc = x;
    for (unsigned i = 1; i < k; ++i) acc = reduce(lift_multiply(acc, x));
    return reduce(acc);
}

std::vector<IntVector> RepresentationRng::generators() const {
    std::vector<IntVector> g;
    for (std::size_t i = 1; i < dimension(); ++i) {
        IntVector u = unit_vector(dimension(), i);
        u[0] -= delta_[i];
        g.push_back(std::move(u));
    }
    return g;
}

AbelianGroupInvariants RepresentationRng::ideal_invariants() const { return perp_quotient_invariants(delta_, c_ext_t_); }

IntVector rng_multiply(const McKayData& d, const IntVector& x, const IntVector& y) {
    return RepresentationRng(d).multiply(x, y);
}

ProductsReport verify_products_annihilated(const McKayData& d) {
    ProductsReport rep;
    auto ab = abelianization_map(d);
    const auto& t = *d.table;
    auto lc = linear_characters(t);
    std::vector<IntVector> images;
    for (std::size_t row : ab.pi) {
        std::size_t k = std::find(lc.rows.begin(), lc.rows.end(), row) - lc.rows.begin();
        images.push_back(lc.exponents[k]);
    }
    auto pi = [&](const IntVector& x) {
        IntVector s(t.num_classes(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(x[i]) != 0) s = add(s, scale(x[i], images[i]));
        return mod_vec(s, lc.modulus);
    };
    RepresentationRng rng(d);
    auto gens = rng.generators();
    rep.pi_kills_products = true;
    rep.isomorphism = ab.isomorphism;
    rep.products_zero = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            IntVector p = rng.lift_multiply(gens[i], gens[j]);
            if (!is_zero(pi(p))) rep.pi_kills_products = false;
            if (!rng.is_zero(p)) {
                rep.products_zero = false;
                rep.nonzero_products.emplace_back(i + 1, j + 1);
            }
        }
    return rep;
}

CayleyReport cayley_digraph_check(const IntVector& invariants, const std::vector<IntVector>& generators) {
    CayleyReport rep;
    rep.invariants = invariants;
    auto elems = abelian_elements(invariants);
    std::map<IntVector, std::size_t> index;
    for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = k;
    auto reduce = [&](IntVector v) {
        if (v.size() != invariants.size()) throw Error(ErrorCode::GeneratorsInvalid, "generator has wrong length");
        for (std::size_t i = 0; i < v.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), invariants[i].get_mpz_t());
        return v;
    };
    IntVector zero(invariants.size(), 0);
    IntVector sum = zero;
    for (const auto& g : generators) {
        IntVector r = reduce(g);
        if (r == zero) throw Error(ErrorCode::GeneratorsInvalid, "generator " + to_string(g) + " is zero");
        rep.generators.push_back(r);
        sum = reduce(add(sum, r));
    }
    if (rep.generators.empty()) throw Error(ErrorCode::GeneratorsInvalid, "no generators");
    if (sum != zero) throw Error(ErrorCode::GeneratorsInvalid, "generators do not sum to zero");
    std::set<IntVector> reached{zero};
    std::vector<IntVector> frontier{zero};
    while (!frontier.empty()) {
        IntVector x = frontier.back();
        frontier.pop_back();
        for (const auto& g : rep.generators) {
            IntVector y = reduce(add(x, g));
            if (reached.insert(y).second) frontier.push_back(y);
        }
    }
    if (reached.size() != elems.size()) throw Error(ErrorCode::GeneratorsInvalid, "generators do not generate the group");

    rep.r = rep.generators.size();
    rep.group_order = static_cast<long>(elems.size());
    const std::size_t m = elems.size();
    IntMatrix lap(m, m);
    VirtualCharacter gamma(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        lap(a, a) += static_cast<long>(rep.r);
        for (const auto& g : rep.generators) lap(a, index.at(reduce(add(elems[a], g)))) -= 1;
    }
    for (const auto& g : rep.generators) gamma[index.at(g)] += 1;
    IntMatrix reduced = strike(lap, 0);
    rep.arborescences = arborescence_count(reduced);
    rep.critical = cokernel_invariants(reduced.transpose());
    if (!(rep.critical.finite() && rep.critical.torsion_order() == rep.arborescences))
        throw Error(ErrorCode::VerificationFailed, "critical group order differs from the arborescence count");

    auto table = std::make_shared<const CharacterTable>(abelian_character_table(invariants));
    rep.laplacian_matches_mckay = mckay_cartan(table, gamma).C_ext == lap;

    if (rep.r == 2) {
        rep.cyclic_pm_pair = reduce(add(rep.generators[0], rep.generators[1])) == zero;
        rep.passed = rep.cyclic_pm_pair && rep.arborescences == rep.group_order &&
                     rep.critical == AbelianGroupInvariants::from_cyclic_factors(invariants);
    } else {
        rep.passed = rep.arborescences > rep.group_order;
    }
    rep.passed = rep.passed && rep.laplacian_matches_mckay;
    return rep;
}

}  // namespace critlib
