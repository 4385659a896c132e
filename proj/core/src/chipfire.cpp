#include "critlib/chipfire.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace critlib {

std::uint64_t enumeration_guard() {
    if (const char* env = std::getenv("CRITLIB_GUARD")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, std::string("CRITLIB_GUARD is not an integer: ") + env);
        }
    }
    return 1000000;
}

ChipSystem ChipSystem::certify(const IntMatrix& c) {
    if (!c.square() || c.rows() == 0) throw Error(ErrorCode::InvalidArgument, "chip system needs a nonempty square matrix");
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && c(i, j) > 0)
                throw Error(ErrorCode::NotZMatrix, "positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                                       std::to_string(j + 1) + ")");
    ChipSystem s;
    s.c_ = c;
    s.ct_ = c.transpose();
    try {
        s.inverse_ = exact_inverse(c);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::NotAvalancheFinite, "matrix is singular");
        throw;
    }
    for (const auto& x : s.inverse_.data())
        if (sgn(x) < 0) throw Error(ErrorCode::NotAvalancheFinite, "inverse has a negative entry");
    s.cert_.inverse_nonneg = true;

    RatVector ones(n, Rational(1));
    s.cert_.witness_r = s.inverse_.apply(ones);
    for (const auto& r : s.cert_.witness_r)
        if (sgn(r) <= 0) throw Error(ErrorCode::NotAvalancheFinite, "witness r is not positive");
    if (to_rational(c).apply(s.cert_.witness_r) != ones)
        throw Error(ErrorCode::NotAvalancheFinite, "C r != 1");

    s.diag_.resize(n);
    s.vc_.resize(n);
    s.out_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.diag_[i] = c(i, i);
        s.vc_[i] = c(i, i) - 1;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && c(i, j) < 0) s.out_[i].push_back(j);
    }
    // diag(C) need not lie in im(C^t); a positive probe inside im(C^t) keeps stab(v + p) in v's coset
    Integer m = 1;
    for (const auto& q : s.inverse_.transpose().apply(ones)) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den_mpz_t());
    s.probe_ = constant_vector(n, 1);
    for (auto& x : s.probe_) x = m;
    s.det_ = determinant(c);
    s.quotient_ = std::make_shared<const LatticeQuotient>(s.ct_);
    return s;
}

void ChipSystem::check_length(const ChipConfig& v) const {
    if (v.size() != size())
        throw Error(ErrorCode::InvalidArgument, "configuration has length " + std::to_string(v.size()) + ", expected " +
                                                    std::to_string(size()));
}

bool ChipSystem::is_stable(const ChipConfig& v) const {
    check_length(v);
    for (std::size_t i = 0; i < size(); ++i)
        if (v[i] >= diag_[i]) return false;
    return true;
}

ChipConfig ChipSystem::topple(const ChipConfig& v, std::size_t i) const {
    check_length(v);
    if (i >= size()) throw Error(ErrorCode::InvalidArgument, "node out of range");
    if (v[i] < diag_[i])
        throw Error(ErrorCode::InvalidToppling, "node " + std::to_string(i + 1) + " holds " + v[i].get_str() +
                                                    " chips, needs " + diag_[i].get_str());
    ChipConfig w = v;
    for (std::size_t j = 0; j < size(); ++j) w[j] -= c_(i, j);
    return w;
}

Stabilization ChipSystem::stabilize(const ChipConfig& v, FiringStrategy strategy) const {
    check_length(v);
    if (!is_nonnegative(v)) throw Error(ErrorCode::NegativeInput, "configuration " + to_string(v) + " has a negative entry");
    const std::size_t n = size();
    Stabilization out{v, {{}, IntVector(n)}};
    ChipConfig& w = out.stable;
    FiringRecord& rec = out.record;

    auto fire = [&](std::size_t i, const Integer& k) {
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(c_(i, j)) != 0) w[j] -= k * c_(i, j);
        rec.counts[i] += k;
        for (unsigned long t = 0; t < k.get_ui(); ++t) rec.sequence.push_back(i);
    };

    if (strategy == FiringStrategy::Queue) {
        std::deque<std::size_t> queue;
        std::vector<bool> queued(n, false);
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] >= diag_[i]) {
                queue.push_back(i);
                queued[i] = true;
            }
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            queued[i] = false;
            if (w[i] < diag_[i]) continue;
            Integer k = w[i] / diag_[i];
            fire(i, k);
            for (std::size_t j : out_[i])
                if (!queued[j] && w[j] >= diag_[j]) {
                    queue.push_back(j);
                    queued[j] = true;
                }
        }
    } else {
        while (true) {
            std::size_t best = n;
            Integer surplus;
            for (std::size_t i = 0; i < n; ++i) {
                if (w[i] < diag_[i]) continue;
                Integer s = w[i] - diag_[i];
                if (best == n || s > surplus) {
                    best = i;
                    surplus = s;
                }
            }
            if (best == n) break;
            fire(best, Integer(1));
        }
    }
    return out;
}

ChipConfig ChipSystem::avalanche_op(const ChipConfig& v, std::size_t i) const {
    if (i >= size()) throw Error(ErrorCode::InvalidArgument, "node out of range");
    return stabilize(add(v, unit_vector(size(), i))).stable;
}

bool ChipSystem::is_recurrent(const ChipConfig& v) const {
    check_length(v);
    if (!is_nonnegative(v) || !is_stable(v)) return false;
    return stabilize(add(v, probe_)).stable == v;
}

std::vector<ChipConfig> ChipSystem::stable_configurations() const {
    const std::uint64_t guard = enumeration_guard();
    Integer total = 1;
    for (const auto& d : diag_) {
        total *= d;
        if (total > Integer(std::to_string(guard)))
            throw Error(ErrorCode::TooLarge, "stable configurations exceed the enumeration guard of " + std::to_string(guard));
    }
    std::vector<ChipConfig> out;
    out.reserve(total.get_ui());
    ChipConfig v(size(), Integer(0));
    while (true) {
        out.push_back(v);
        std::size_t i = size();
        while (i > 0) {
            --i;
            if (v[i] + 1 < diag_[i]) {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<ChipConfig> ChipSystem::recurrent_representatives() const {
    std::vector<ChipConfig> out;
    for (auto& v : stable_configurations())
        if (is_recurrent(v)) out.push_back(std::move(v));
    return out;
}

std::vector<ChipConfig> ChipSystem::superstable_representatives() const {
    auto rec = recurrent_representatives();
    std::vector<ChipConfig> out;
    out.reserve(rec.size());
    for (const auto& v : rec) out.push_back(sub(vc_, v));
    std::sort(out.begin(), out.end());
    return out;
}

bool ChipSystem::is_superstable(const ChipConfig& u) const {
    check_length(u);
    if (!is_nonnegative(u)) return false;
    return is_recurrent(sub(vc_, u));
}

bool ChipSystem::is_superstable_direct(const ChipConfig& u) const {
    check_length(u);
    if (!is_nonnegative(u)) return false;
    // u - C^t z >= 0 forces z <= (C^t)^{-1} u because (C^t)^{-1} >= 0.
    const std::size_t n = size();
    RatVector ur(u.begin(), u.end());
    RatVector bound_q = inverse_.transpose().apply(ur);
    IntVector bound(n);
    Integer box = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_fdiv_q(bound[i].get_mpz_t(), bound_q[i].get_num_mpz_t(), bound_q[i].get_den_mpz_t());
        box *= bound[i] + 1;
    }
    if (box > Integer(std::to_string(enumeration_guard())))
        throw Error(ErrorCode::TooLarge, "superstability search box exceeds the enumeration guard");
    IntVector z(n, Integer(0));
    while (true) {
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (z[i] < bound[i]) {
                z[i] += 1;
                break;
            }
            z[i] = 0;
        }
        if (i == n) return true;
        if (is_nonnegative(sub(u, ct_.apply(z)))) return false;
    }
}

Rational ChipSystem::energy(const ChipConfig& u) const {
    check_length(u);
    RatVector x = inverse_.apply(RatVector(u.begin(), u.end()));
    Rational e = 0;
    for (const auto& t : x) e += t * t;
    return e;
}

BurningCertificate ChipSystem::check_burning(const ChipConfig& b) const {
    check_length(b);
    if (!is_nonnegative(b)) throw Error(ErrorCode::NotNonnegative, "burning candidate " + to_string(b) + " has a negative entry");
    RatVector zq = solve(ct_, b);
    BurningCertificate cert;
    cert.b = b;
    for (const auto& q : zq) {
        if (q.get_den() != 1) throw Error(ErrorCode::NotInImage, to_string(b) + " is not in im(C^t)");
        cert.z.push_back(q.get_num());
    }
    const std::size_t n = size();
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> frontier;
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(b[i]) > 0) {
            seen[i] = true;
            frontier.push_back(i);
        }
    while (!frontier.empty()) {
        std::size_t i = frontier.front();
        frontier.pop_front();
        for (std::size_t j : out_[i])
            if (!seen[j]) {
                seen[j] = true;
                frontier.push_back(j);
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) throw Error(ErrorCode::NotCovering, "node " + std::to_string(i + 1) + " is not reached from supp(b)");
        cert.reached.push_back(i);
    }
    return cert;
}

ChipSystem::BurningVerdict ChipSystem::recurrent_test_via_burning(const BurningCertificate& cert, const ChipConfig& v) const {
    check_length(v);
    BurningVerdict out;
    if (!is_nonnegative(v)) return out;
    auto s = stabilize(add(v, cert.b));
    out.recurrent = s.stable == v;
    out.counts_match = out.recurrent && s.record.counts == cert.z;
    out.record = std::move(s.record);
    return out;
}

ChipConfig ChipSystem::zero_coset_recurrent() const {
    for (const auto& v : recurrent_representatives())
        if (quotient_->contains(v)) return v;
    throw Error(ErrorCode::NotAvalancheFinite, "no recurrent configuration represents the zero coset");
}

AbelianGroupInvariants perp_quotient_invariants(const IntVector& v, const IntMatrix& a) {
    const std::size_t n = v.size();
    IntMatrix row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = v[j];
    SmithDecomposition snf = smith_normal_form(row);
    if (snf.S(0, 0) != 1) throw Error(ErrorCode::InvalidArgument, "vector is not primitive");
    // Columns 1..n-1 of V span v^perp; V^{-1} gives coordinates.
    IntMatrix coords = unimodular_inverse(snf.V) * a;
    IntMatrix b(n - 1, a.cols());
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) b(i - 1, j) = coords(i, j);
    }
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(coords(0, j)) != 0) throw Error(ErrorCode::InvalidArgument, "matrix columns are not orthogonal to the vector");
    return cokernel_invariants(b);
}

ExtendedCokernelReport extended_cokernel_relations(const IntMatrix& c_ext, std::size_t k) {
    if (!c_ext.square() || k >= c_ext.rows()) throw Error(ErrorCode::InvalidArgument, "strike index out of range");
    auto delta = nullspace_primitive(c_ext);
    auto gamma = nullspace_primitive(c_ext.transpose());
    if (!delta || !gamma) throw Error(ErrorCode::RankDeficiencyNotOne, "extended matrix is nonsingular");
    ExtendedCokernelReport r;
    r.delta = *delta;
    r.gamma = *gamma;
    if (sgn(r.delta[k]) < 0) r.delta = scale(-1, r.delta);
    if (sgn(r.gamma[k]) < 0) r.gamma = scale(-1, r.gamma);
    r.delta_unit = r.delta[k] == 1;
    r.gamma_unit = r.gamma[k] == 1;

    const std::size_t n = c_ext.rows();
    IntMatrix ext_t = c_ext.transpose();
    r.coker_ext_t = cokernel_invariants(ext_t);
    r.coker_t = cokernel_invariants(strike(c_ext, k).transpose());
    r.perp_quotient = perp_quotient_invariants(r.delta, ext_t);
    IntMatrix with_e(n, n + 1);
    with_e(k, 0) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) with_e(i, j + 1) = ext_t(i, j);
    r.alternate = cokernel_invariants(with_e);

    r.perp_relation = r.coker_t == r.perp_quotient;
    r.alternate_relation = r.coker_t == r.alternate;
    AbelianGroupInvariants expected = r.coker_t;
    expected.free_rank += 1;
    r.cokernel_relation = r.coker_ext_t == expected;
    return r;
}

}  // namespace critlib
