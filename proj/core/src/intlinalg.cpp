#include "critlib/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace critlib {

RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

IntVector SmithDecomposition::diagonal() const {
    std::size_t k = std::min(S.rows(), S.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
    return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(src, j)) != 0) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0) m(i, dst) += q * m(i, src);
}

// Row reduce in place over Q; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& S = d.S;
    const std::size_t k = std::min(m, n);

    for (std::size_t t = 0; t < k; ++t) {
        bool done = false;
        while (true) {
            // smallest nonzero |entry| in the trailing block, ties by lowest (row, col)
            std::size_t pi = m, pj = n;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (sgn(S(i, j)) == 0) continue;
                    if (pi == m || mpz_cmpabs(S(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
                        best = S(i, j);
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                done = true;
                break;
            }
            swap_rows(S, t, pi);
            swap_rows(d.U, t, pi);
            swap_cols(S, t, pj);
            swap_cols(d.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(S(i, t)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                q = -q;
                add_row(S, i, t, q);
                add_row(d.U, i, t, q);
                if (sgn(S(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(S(t, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                q = -q;
                add_col(S, j, t, q);
                add_col(d.V, j, t, q);
                if (sgn(S(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            add_row(S, t, bad, Integer(1));
            add_row(d.U, t, bad, Integer(1));
        }
        if (done) break;
        if (sgn(S(t, t)) < 0) {
            for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
            for (std::size_t j = 0; j < m; ++j) d.U(t, j) = -d.U(t, j);
        }
    }
    return d;
}

AbelianGroupInvariants invariants_from_smith(const SmithDecomposition& snf) {
    AbelianGroupInvariants g;
    std::size_t nonzero = 0;
    for (const auto& x : snf.diagonal()) {
        if (sgn(x) == 0) continue;
        ++nonzero;
        if (x > 1) g.torsion.push_back(x);
    }
    g.free_rank = snf.S.rows() - nonzero;
    return g;
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
    return invariants_from_smith(smith_normal_form(a));
}

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_factors(const IntVector& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
    return cokernel_invariants(d);
}

Integer AbelianGroupInvariants::torsion_order() const {
    Integer p = 1;
    for (const auto& t : torsion) p *= t;
    return p;
}

std::string AbelianGroupInvariants::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

Integer determinant(const IntMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    RationalMatrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(m(p, k)) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

std::size_t rank(const IntMatrix& a) {
    RationalMatrix m = to_rational(a);
    return rref(m).size();
}

RationalMatrix exact_inverse(const IntMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(a(i, j));
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots.back() >= n))
        throw Error(ErrorCode::Singular, "matrix has determinant 0");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatVector solve(const IntMatrix& a, const IntVector& b) {
    if (!a.square() || b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "solve: dimension mismatch");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(a(i, j));
        aug(i, n) = Rational(b[i]);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots.back() >= n))
        throw Error(ErrorCode::Singular, "matrix has determinant 0");
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

std::optional<IntVector> nullspace_primitive(const IntMatrix& a) {
    const std::size_t n = a.cols();
    RationalMatrix m = to_rational(a);
    auto pivots = rref(m);
    std::size_t nullity = n - pivots.size();
    if (nullity == 0) return std::nullopt;
    if (nullity >= 2)
        throw Error(ErrorCode::RankDeficiencyNotOne, "nullity is " + std::to_string(nullity));
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RatVector x(n);
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free_col);
    Integer l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector v(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = x[i] * l;
        v[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& e) { return sgn(e) != 0; });
    if (first != v.end() && sgn(*first) < 0)
        for (auto& e : v) e = -e;
    return v;
}

Integer arborescence_count(const IntMatrix& l_reduced) { return determinant(l_reduced); }

IntMatrix strike(const IntMatrix& a, std::size_t index) {
    if (!a.square() || index >= a.rows()) throw Error(ErrorCode::InvalidArgument, "strike index out of range");
    const std::size_t n = a.rows();
    IntMatrix out(n - 1, n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == index) continue;
        for (std::size_t j = 0, c = 0; j < n; ++j) {
            if (j == index) continue;
            out(r, c++) = a(i, j);
        }
        ++r;
    }
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    RationalMatrix inv = exact_inverse(u);
    IntMatrix out(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

LatticeQuotient::LatticeQuotient(const IntMatrix& a)
    : snf_(smith_normal_form(a)), u_inverse_(unimodular_inverse(snf_.U)), invariants_(invariants_from_smith(snf_)) {
    diag_ = snf_.diagonal();
    diag_.resize(snf_.U.rows(), Integer(0));
}

IntVector LatticeQuotient::canonical(const IntVector& x) const {
    IntVector y = snf_.U.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (sgn(diag_[i]) == 0) continue;
        mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), diag_[i].get_mpz_t());
    }
    return y;
}

IntVector LatticeQuotient::reduce(const IntVector& x) const { return u_inverse_.apply(canonical(x)); }

bool LatticeQuotient::contains(const IntVector& x) const { return is_zero(canonical(x)); }

bool LatticeQuotient::equivalent(const IntVector& x, const IntVector& y) const { return contains(sub(x, y)); }

std::optional<IntVector> LatticeQuotient::preimage(const IntVector& x) const {
    IntVector y = snf_.U.apply(x);
    IntVector w(snf_.V.rows());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (sgn(diag_[i]) == 0) {
            if (sgn(y[i]) != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(y[i].get_mpz_t(), diag_[i].get_mpz_t())) return std::nullopt;
        w[i] = y[i] / diag_[i];
    }
    return snf_.V.apply(w);
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IntVector scale(const Integer& c, const IntVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool is_nonnegative(const IntVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector v(n);
    v.at(i) = 1;
    return v;
}

IntVector constant_vector(std::size_t n, long value) { return IntVector(n, Integer(value)); }

std::string to_string(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string to_string(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        s += to_string(m.row(i));
    }
    return s + "]";
}

std::string to_string(const RationalMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace critlib
