#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critlib/chipfire.hpp"
#include "critlib/intlinalg.hpp"

namespace critlib {

struct DynkinType {
    char family = 'A';
    int rank = 1;

    // Accepts strings such as "A5", "e6", "C4"; throws InvalidType or InvalidRank.
    static DynkinType parse(std::string_view text);
    std::string to_string() const;
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Bourbaki numbering; E6 rows as 1-3-4-5-6 with 2 attached to 4. c_ij = (alpha_i, alpha_j^vee).
IntMatrix cartan_matrix(DynkinType type);

struct PositiveRoot {
    IntVector simple;   // coefficients on simple roots
    IntVector weight;   // C^t * simple, i.e. fundamental-weight coordinates
    int height = 0;
    Integer length2;    // squared length, scaled so the shortest simple root has length2 = 2 * min symmetrizer
};

struct RootPoset {
    std::vector<PositiveRoot> roots;  // sorted by height, then lexicographically on simple coords
    // (lower, upper, node) with upper = lower + alpha_node.
    struct Cover {
        std::size_t lower;
        std::size_t upper;
        std::size_t node;
    };
    std::vector<Cover> covers;
    std::size_t maximum = 0;

    std::optional<std::size_t> find(const IntVector& simple) const;
};

RootPoset positive_roots_from_cartan(const IntMatrix& cartan);
RootPoset positive_roots(DynkinType type);

struct RootSystemData {
    std::string label;
    IntMatrix cartan;
    IntMatrix extended_cartan;
    RootPoset poset;
    std::size_t highest_root = 0;
    std::size_t highest_short_root = 0;
    IntVector symmetrizer;   // relative squared lengths of the simple roots
    IntVector marks;         // delta, length l+1, delta_0 = 1, C~^t delta = 0
    IntVector dual_marks;    // delta^vee, length l+1, coroot coefficients of alpha*
    IntVector phi;           // length l+1, phi_0 = 1, C~ phi = 0
    std::vector<std::size_t> minuscule_nodes;  // 0-based
    Integer coxeter_number;
    Integer index_of_connection;

    static RootSystemData build(DynkinType type);
    static RootSystemData from_cartan(const IntMatrix& cartan, std::string label);

    std::size_t rank() const { return cartan.rows(); }
    const PositiveRoot& highest() const { return poset.roots[highest_root]; }
    const PositiveRoot& highest_short() const { return poset.roots[highest_short_root]; }
    IntVector rho() const { return constant_vector(rank(), 1); }
    // Dual root system built from the transposed Cartan matrix, same node numbering.
    RootSystemData dual() const;
};

std::vector<std::size_t> minuscule_dominant_weights(DynkinType type);

struct Theorem11Report {
    DynkinType type;
    std::vector<std::size_t> minuscule_nodes;
    Integer index_of_connection;
    std::vector<ChipConfig> superstables;
    std::vector<ChipConfig> expected_superstables;
    std::vector<ChipConfig> recurrents;
    std::vector<ChipConfig> expected_recurrents;
    bool superstables_match = false;
    bool recurrents_match = false;
    bool passed() const { return superstables_match && recurrents_match; }
};

Theorem11Report verify_theorem_1_1(DynkinType type);

bool burning_configurations_cartan(DynkinType type, const IntVector& b);

struct RootChain {
    std::vector<std::size_t> chain;  // root indices, ascending: beta_1 < ... < beta_{h-1} = highest root
    FiringRecord record;
    std::vector<ChipConfig> states;  // rho + highest root, ..., rho
};

RootChain stabilization_chain_from_rho(const RootSystemData& data);
// Number of maximal chains of the root poset (dynamic programming over covers).
Integer count_maximal_chains(const RootPoset& poset);

IntVector numbers_fire(const IntMatrix& c, const IntVector& u, std::size_t i);

struct LoopingResult {
    std::size_t node = 0;                  // 0-based minuscule node
    std::vector<std::size_t> fired;        // i_1, ..., i_m (0-based)
    std::vector<IntVector> numbers;        // u^(0), ..., u^(m) with u^(m) = lambda
    ChipConfig start;                      // rho - lambda
    std::vector<ChipConfig> toppling;      // v^(0) = start + alpha*, ..., v^(m) = start
    IntVector padding;                     // [1, delta^vee], spans the kernel of the game matrix
    IntMatrix game_matrix;                 // C~(dual)^t, principal block equals C
    std::vector<IntVector> padded;         // u~^(-1), u~^(0), ..., u~^(m) = u~^(-1)
};

// Empty firing_order means lowest-index choice at every step.
LoopingResult minuscule_toppling_and_looping(const RootSystemData& data, std::size_t node,
                                             const std::vector<std::size_t>& firing_order = {});

}  // namespace critlib
