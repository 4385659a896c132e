#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "critlib/intlinalg.hpp"

namespace critlib {

using ChipConfig = IntVector;

struct FiringRecord {
    std::vector<std::size_t> sequence;
    IntVector counts;
};

struct AvalancheCertificate {
    RatVector witness_r;
    bool inverse_nonneg = false;
};

struct BurningCertificate {
    ChipConfig b;
    IntVector z;
    std::vector<std::size_t> reached;
};

enum class FiringStrategy { Queue, MaxSurplus };

struct Stabilization {
    ChipConfig stable;
    FiringRecord record;
};

// Default bound on the number of stable configurations we are willing to enumerate.
// The CRITLIB_GUARD environment variable overrides it.
std::uint64_t enumeration_guard();

class ChipSystem {
public:
    static ChipSystem certify(const IntMatrix& c);

    std::size_t size() const { return c_.rows(); }
    const IntMatrix& matrix() const { return c_; }
    const IntMatrix& transpose() const { return ct_; }
    const RationalMatrix& inverse() const { return inverse_; }
    const IntVector& diag() const { return diag_; }
    const IntVector& vC() const { return vc_; }
    // m * (1,...,1) with m minimal such that it lies in im(C^t); used by is_recurrent.
    const IntVector& recurrence_probe() const { return probe_; }
    const std::vector<std::vector<std::size_t>>& digraph() const { return out_; }
    const AvalancheCertificate& certificate() const { return cert_; }
    const Integer& det() const { return det_; }
    // Quotient Z^l / im(C^t); its invariants are the critical group.
    const LatticeQuotient& quotient() const { return *quotient_; }

    bool is_stable(const ChipConfig& v) const;

    ChipConfig topple(const ChipConfig& v, std::size_t i) const;
    Stabilization stabilize(const ChipConfig& v, FiringStrategy strategy = FiringStrategy::Queue) const;
    ChipConfig avalanche_op(const ChipConfig& v, std::size_t i) const;
    bool is_recurrent(const ChipConfig& v) const;

    // All stable configurations in lexicographic order (guarded).
    std::vector<ChipConfig> stable_configurations() const;
    std::vector<ChipConfig> recurrent_representatives() const;
    std::vector<ChipConfig> superstable_representatives() const;
    bool is_superstable(const ChipConfig& u) const;
    // Definition-level check: no nonzero z >= 0 with u - C^t z >= 0.
    bool is_superstable_direct(const ChipConfig& u) const;
    Rational energy(const ChipConfig& u) const;

    BurningCertificate check_burning(const ChipConfig& b) const;
    struct BurningVerdict {
        bool recurrent = false;
        FiringRecord record;
        // Only meaningful when recurrent: counts equal the certificate's z.
        bool counts_match = false;
    };
    BurningVerdict recurrent_test_via_burning(const BurningCertificate& cert, const ChipConfig& v) const;

    ChipConfig zero_coset_recurrent() const;

private:
    ChipSystem() = default;
    void check_length(const ChipConfig& v) const;

    IntMatrix c_;
    IntMatrix ct_;
    RationalMatrix inverse_;
    IntVector diag_;
    IntVector vc_;
    IntVector probe_;
    std::vector<std::vector<std::size_t>> out_;
    AvalancheCertificate cert_;
    Integer det_;
    std::shared_ptr<const LatticeQuotient> quotient_;
};

// Cokernel comparisons for an extended matrix with one index struck.
struct ExtendedCokernelReport {
    IntVector delta;  // right null vector
    IntVector gamma;  // left null vector
    bool delta_unit = false;
    bool gamma_unit = false;
    AbelianGroupInvariants coker_ext_t;   // coker(C~^t)
    AbelianGroupInvariants coker_t;       // coker(C^t)
    AbelianGroupInvariants perp_quotient; // delta^perp / im(C~^t)
    AbelianGroupInvariants alternate;     // Z^{l+1} / (Z e_k + im(C~^t))
    bool perp_relation = false;           // coker(C^t) = delta^perp / im(C~^t)
    bool alternate_relation = false;      // coker(C^t) = Z^{l+1} / (Z e_k + im(C~^t))
    bool cokernel_relation = false;       // coker(C~^t) = Z + coker(C^t)
    bool hypotheses_hold() const { return delta_unit && gamma_unit; }
    bool relations_hold() const { return perp_relation && alternate_relation && cokernel_relation; }
};

ExtendedCokernelReport extended_cokernel_relations(const IntMatrix& c_ext, std::size_t strike_index = 0);

// Invariants of v^perp / im(A) where A's columns lie in v^perp (v primitive).
AbelianGroupInvariants perp_quotient_invariants(const IntVector& v, const IntMatrix& a);

}  // namespace critlib
