#pragma once

#include <memory>
#include <vector>

#include "critlib/character_table.hpp"
#include "critlib/chipfire.hpp"
#include "critlib/intlinalg.hpp"

namespace critlib {

struct McKayData {
    std::shared_ptr<const CharacterTable> table;
    VirtualCharacter gamma;
    Integer n;                          // deg(gamma)
    IntMatrix M;                        // tensor multiplicities
    IntMatrix C_ext;                    // nI - M
    IntMatrix C;                        // C_ext with index 0 struck
    IntVector delta_e;                  // degrees
    std::vector<std::size_t> dual_involution;  // conj(chi_i) = chi_{i*}
    std::vector<Cyclotomic> gamma_values;      // chi_gamma on each class
};

IntMatrix tensor_multiplicities(const CharacterTable& table, const VirtualCharacter& gamma);
McKayData mckay_cartan(std::shared_ptr<const CharacterTable> table, const VirtualCharacter& gamma);
// Uses the table's natural_gamma.
McKayData mckay_cartan(std::shared_ptr<const CharacterTable> table);

struct Faithfulness {
    bool faithful = false;
    std::vector<std::size_t> kernel_classes;
};
Faithfulness is_faithful(const CharacterTable& table, const VirtualCharacter& gamma);

// Checks eq. C~ delta^(g) = (n - chi_gamma(g)) delta^(g) for every class; returns false on any failure.
bool eigenvector_equations_hold(const McKayData& data);
// C~_ij = C~_{j* i*}.
bool dual_symmetry_holds(const McKayData& data);
// C~_ij = C~_{phi(i) phi(j)} where phi(i) is the index of chi_i * lambda for a degree-1 character lambda.
bool linear_twist_symmetry_holds(const McKayData& data);

ChipSystem certify_avalanche_finite_mckay(const McKayData& data);

struct CriticalGroupPresentations {
    AbelianGroupInvariants coker_t;        // coker(C^t)
    AbelianGroupInvariants perp_quotient;  // delta^perp / im(C~^t)
    AbelianGroupInvariants alternate;      // Z^{l+1} / (Z e0 + im(C~^t))
    AbelianGroupInvariants coker_ext_t;    // coker(C~^t), expected Z + K
    bool agree() const;
};
CriticalGroupPresentations critical_group_presentations(const McKayData& data);
// Throws PresentationsDisagree when the four presentations differ.
AbelianGroupInvariants critical_group(const McKayData& data);

BurningCertificate burning_config_b0(const McKayData& data);

// Degree-1 characters as exponent vectors: chi(c) = zeta_N^{e_c}.
struct LinearCharacters {
    std::vector<std::size_t> rows;
    std::vector<IntVector> exponents;
    unsigned modulus = 1;
    AbelianGroupInvariants invariants;
    // Index into rows for an exponent vector, or rows.size() if none.
    std::size_t find(const IntVector& exponent) const;
};
LinearCharacters linear_characters(const CharacterTable& table);
std::size_t det_character(const CharacterTable& table, std::size_t chi);
bool is_in_SL(const McKayData& data);

struct AbelianizationReport {
    std::vector<std::size_t> pi;  // e_i -> row index of det_{chi_i}
    bool e0_trivial = false;
    bool kills_relations = false;
    bool surjective = false;
    AbelianGroupInvariants critical;
    AbelianGroupInvariants linear_group;
    bool isomorphism = false;
};
// Throws KernelCheckFailed if pi does not vanish on e0 and on im(C~^t).
AbelianizationReport abelianization_map(const McKayData& data);

// N[i][j][k] with chi_i chi_j = sum_k N[i][j][k] chi_k.
using StructureConstants = std::vector<std::vector<IntVector>>;
StructureConstants structure_constants(const CharacterTable& table);

// R(G) / im(C~^t) with multiplication from the representation ring; I(gamma) is the degree-0 part.
class RepresentationRng {
public:
    explicit RepresentationRng(const McKayData& data);

    std::size_t dimension() const { return delta_.size(); }
    Integer degree(const IntVector& x) const { return dot(delta_, x); }
    IntVector reduce(const IntVector& x) const { return quotient_.reduce(x); }
    bool is_zero(const IntVector& x) const { return quotient_.contains(x); }
    bool equal(const IntVector& x, const IntVector& y) const { return quotient_.equivalent(x, y); }
    // Product in R(G), no reduction.
    IntVector lift_multiply(const IntVector& x, const IntVector& y) const;
    // Throws NotDegreeZero unless both factors have degree 0.
    IntVector multiply(const IntVector& x, const IntVector& y) const;
    IntVector power(const IntVector& x, unsigned k) const;
    // u_i = e_i - delta_i e_0, i = 1..l
    std::vector<IntVector> generators() const;
    // Invariants of I(gamma) = delta^perp / im(C~^t).
    AbelianGroupInvariants ideal_invariants() const;
    const StructureConstants& constants() const { return constants_; }

private:
    IntVector delta_;
    IntMatrix c_ext_t_;
    LatticeQuotient quotient_;
    StructureConstants constants_;
};

IntVector rng_multiply(const McKayData& data, const IntVector& x, const IntVector& y);

struct ProductsReport {
    bool pi_kills_products = false;
    bool isomorphism = false;
    bool products_zero = false;  // meaningful when isomorphism
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_products;
    bool passed() const { return pi_kills_products && (!isomorphism || products_zero); }
};
ProductsReport verify_products_annihilated(const McKayData& data);

struct CayleyReport {
    IntVector invariants;
    std::vector<IntVector> generators;
    Integer group_order;
    Integer arborescences;
    std::size_t r = 0;
    bool cyclic_pm_pair = false;
    AbelianGroupInvariants critical;
    bool laplacian_matches_mckay = false;  // L~ equals the McKay-Cartan matrix of sum chi_{g}
    bool passed = false;                   // r = 2: a = |A| and K = A; r >= 3: a > |A|
};
// Throws GeneratorsInvalid unless generators are nonzero, generate, and sum to zero.
CayleyReport cayley_digraph_check(const IntVector& invariants, const std::vector<IntVector>& generators);

}  // namespace critlib
