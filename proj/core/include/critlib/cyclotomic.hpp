#pragma once

#include <memory>
#include <string>
#include <vector>

#include "critlib/intlinalg.hpp"

namespace critlib {

// Q(zeta_N) with the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(unsigned n);

    unsigned order() const { return n_; }
    std::size_t degree() const { return degree_; }
    // zeta^k expressed in the power basis, for 0 <= k < N.
    const RatVector& power(unsigned k) const { return powers_[k % n_]; }
    const IntVector& polynomial() const { return phi_; }

private:
    explicit CyclotomicField(unsigned n);

    unsigned n_;
    std::size_t degree_;
    IntVector phi_;  // coefficients of Phi_N, low degree first, monic
    std::vector<RatVector> powers_;
};

IntVector cyclotomic_polynomial(unsigned n);

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(unsigned n, const Rational& value = 0);

    static Cyclotomic root_of_unity(unsigned n, unsigned k);
    // Sum of coeffs[k] * zeta^k over all k (any length, reduced).
    static Cyclotomic from_powers(unsigned n, const RatVector& coeffs);

    unsigned order() const { return field_->order(); }
    const RatVector& coeffs() const { return coeffs_; }

    Cyclotomic conj() const;
    bool is_rational() const;
    bool is_integer() const;
    Rational rational_value() const;  // requires is_rational()
    // Approximate complex value, for display only.
    std::string to_string() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& c);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    bool operator==(const Rational& r) const;

private:
    void check_same_field(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    RatVector coeffs_;
};

}  // namespace critlib
