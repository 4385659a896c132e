#include "critlib/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace critlib {

namespace {

// Polynomial quotient a / b over Z for monic b (exact division expected).
IntVector poly_divide(IntVector a, const IntVector& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {Integer(0)};
    IntVector q(a.size() - db);
    for (std::size_t k = a.size(); k-- > db;) {
        Integer c = a[k];
        q[k - db] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (std::size_t j = 0; j < db; ++j)
        if (sgn(a[j]) != 0) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
}

}  // namespace

IntVector cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IntVector p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicField::CyclotomicField(unsigned n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    degree_ = phi_.size() - 1;
    powers_.reserve(n);
    RatVector cur(degree_, Rational(0));
    cur[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        powers_.push_back(cur);
        // multiply by x and reduce with the monic Phi_n
        RatVector next(degree_, Rational(0));
        for (std::size_t j = 0; j + 1 < degree_; ++j) next[j + 1] = cur[j];
        const Rational top = cur[degree_ - 1];
        if (sgn(top) != 0)
            for (std::size_t j = 0; j < degree_; ++j) next[j] -= top * Rational(phi_[j]);
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
    return slot;
}

Cyclotomic::Cyclotomic(unsigned n, const Rational& value) : field_(CyclotomicField::get(n)) {
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, unsigned k) {
    Cyclotomic z(n);
    z.coeffs_ = z.field_->power(k % n);
    return z;
}

Cyclotomic Cyclotomic::from_powers(unsigned n, const RatVector& coeffs) {
    Cyclotomic z(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) == 0) continue;
        const RatVector& p = z.field_->power(static_cast<unsigned>(k % n));
        for (std::size_t j = 0; j < p.size(); ++j)
            if (sgn(p[j]) != 0) z.coeffs_[j] += coeffs[k] * p[j];
    }
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    const unsigned n = order();
    RatVector powers(n, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[(n - k % n) % n] += coeffs_[k];
    return from_powers(n, powers);
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0) return false;
    return true;
}

bool Cyclotomic::is_integer() const { return is_rational() && coeffs_[0].get_den() == 1; }

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error(ErrorCode::NotIntegral, "cyclotomic value is not rational");
    return coeffs_[0];
}

bool Cyclotomic::operator==(const Rational& r) const { return is_rational() && coeffs_[0] == r; }

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
    if (order() != o.order()) throw Error(ErrorCode::InvalidArgument, "cyclotomic values from different fields");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_field(o);
    const std::size_t d = coeffs_.size();
    RatVector prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    *this = from_powers(order(), prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    double re = 0, im = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        double c = coeffs_[k].get_d();
        double t = 2 * std::numbers::pi * static_cast<double>(k) / order();
        re += c * std::cos(t);
        im += c * std::sin(t);
    }
    std::ostringstream os;
    os.precision(6);
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    return os.str();
}

}  // namespace critlib
