#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critlib/cyclotomic.hpp"
#include "critlib/intlinalg.hpp"

namespace critlib {

struct ConjugacyClass {
    std::string label;
    Integer size;
    unsigned order = 1;
};

using VirtualCharacter = IntVector;

struct CharacterTable {
    std::string name;
    Integer group_order;
    unsigned exponent = 1;
    std::vector<ConjugacyClass> classes;
    // power_map[c][k-1] = class of g^k for g in class c, k = 1..exponent
    std::vector<std::vector<std::size_t>> power_map;
    std::vector<std::vector<Cyclotomic>> characters;  // row 0 trivial, class 0 identity
    std::optional<VirtualCharacter> natural_gamma;

    std::size_t num_irreducibles() const { return characters.size(); }
    std::size_t num_classes() const { return classes.size(); }
    Integer degree(std::size_t i) const;
    IntVector degrees() const;
    std::size_t power_class(std::size_t c, const Integer& k) const;
    // Values of a virtual character on every class.
    std::vector<Cyclotomic> evaluate(const VirtualCharacter& gamma) const;

    // Throws CorruptTable on any failed invariant.
    void validate() const;

    static CharacterTable from_json(std::string_view text);
    std::string to_json() const;
};

// Z/n1 x Z/n2 x ...; elements ordered lexicographically, chi_b(a) = zeta^{sum a_i b_i N / n_i}.
CharacterTable abelian_character_table(const IntVector& invariants);
// Element tuples of the abelian group in the same order as the classes/characters.
std::vector<IntVector> abelian_elements(const IntVector& invariants);

struct BundledGroup {
    std::string name;
    std::string description;
};

std::vector<BundledGroup> bundled_groups();
// Names: cyclic-<m>, binary-dihedral-<m>, binary-tetrahedral, binary-octahedral, binary-icosahedral,
// A4, S4, A5, abelian-<n1>x<n2>x...
std::shared_ptr<const CharacterTable> load_group(std::string_view name);

}  // namespace critlib
