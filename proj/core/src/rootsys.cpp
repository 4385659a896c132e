#include "critlib/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

namespace critlib {

DynkinType DynkinType::parse(std::string_view text) {
    if (text.size() < 2) throw Error(ErrorCode::InvalidType, "bad Dynkin type '" + std::string(text) + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDEFG").find(family) == std::string_view::npos)
        throw Error(ErrorCode::InvalidType, "unknown family in '" + std::string(text) + "'");
    int rank = 0;
    for (char ch : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorCode::InvalidType, "bad rank in '" + std::string(text) + "'");
        rank = rank * 10 + (ch - '0');
        if (rank > 1000) throw Error(ErrorCode::InvalidRank, "rank too large in '" + std::string(text) + "'");
    }
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B':
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
    }
    if (!ok) throw Error(ErrorCode::InvalidRank, "no type " + std::string(1, family) + std::to_string(rank));
    return {family, rank};
}

std::string DynkinType::to_string() const { return std::string(1, family) + std::to_string(rank); }

IntMatrix cartan_matrix(DynkinType type) {
    DynkinType t = DynkinType::parse(type.to_string());
    const std::size_t n = static_cast<std::size_t>(t.rank);
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
    auto link = [&](std::size_t a, std::size_t b) {  // 1-based, simple bond
        c(a - 1, b - 1) = -1;
        c(b - 1, a - 1) = -1;
    };
    switch (t.family) {
        case 'A':
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            c(n - 2, n - 1) = -2;
            break;
        case 'C':
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            c(n - 1, n - 2) = -2;
            break;
        case 'D':
            for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(1, 2);
            link(2, 3);
            link(3, 4);
            c(1, 2) = -2;
            break;
        case 'G':
            link(1, 2);
            c(1, 0) = -3;
            break;
    }
    return c;
}

std::optional<std::size_t> RootPoset::find(const IntVector& simple) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), simple, [](const PositiveRoot& r, const IntVector& s) {
        int hs = 0;
        for (const auto& x : s) hs += static_cast<int>(x.get_si());
        if (r.height != hs) return r.height < hs;
        return r.simple < s;
    });
    if (it != roots.end() && it->simple == simple) return static_cast<std::size_t>(it - roots.begin());
    return std::nullopt;
}

namespace {

// Relative squared lengths L_i with c_ij L_j = c_ji L_i, scaled to coprime integers.
IntVector symmetrize(const IntMatrix& c) {
    const std::size_t n = c.rows();
    std::vector<Rational> len(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        len[root] = 1;
        seen[root] = true;
        std::deque<std::size_t> todo{root};
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || sgn(c(i, j)) == 0 || seen[j]) continue;
                len[j] = len[i] * Rational(c(j, i)) / Rational(c(i, j));
                seen[j] = true;
                todo.push_back(j);
            }
        }
    }
    Integer l = 1;
    for (const auto& x : len) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = len[i] * l;
        out[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    for (auto& x : out) x /= g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c(i, j) * out[j] != c(j, i) * out[i])
                throw Error(ErrorCode::InvalidArgument, "Cartan matrix is not symmetrizable");
    return out;
}

Integer squared_length(const IntMatrix& c, const IntVector& sym, const IntVector& beta) {
    // 2 (beta, beta) in units where (alpha_i, alpha_i) = sym_i
    Integer s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j) s += beta[i] * beta[j] * c(i, j) * sym[j];
    return s;
}

bool root_less(const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple < b.simple;
}

}  // namespace

RootPoset positive_roots_from_cartan(const IntMatrix& c) {
    const std::size_t n = c.rows();
    const IntMatrix ct = c.transpose();
    IntVector sym = symmetrize(c);
    std::map<IntVector, int> known;
    std::vector<IntVector> level;
    for (std::size_t i = 0; i < n; ++i) {
        level.push_back(unit_vector(n, i));
        known[level.back()] = 1;
    }
    std::vector<IntVector> all = level;
    while (!level.empty()) {
        std::vector<IntVector> next;
        for (const auto& beta : level) {
            IntVector w = ct.apply(beta);
            for (std::size_t i = 0; i < n; ++i) {
                // p = length of the alpha_i-string below beta
                long p = 0;
                IntVector down = beta;
                while (true) {
                    down[i] -= 1;
                    if (known.count(down) == 0) break;
                    ++p;
                }
                long q = p - w[i].get_si();
                if (q <= 0) continue;
                IntVector up = beta;
                up[i] += 1;
                if (known.emplace(up, 1).second) next.push_back(up);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
        if (all.size() > 100000) throw Error(ErrorCode::InvalidArgument, "Cartan matrix is not of finite type");
    }

    RootPoset poset;
    for (auto& s : all) {
        PositiveRoot r;
        r.simple = s;
        r.weight = ct.apply(s);
        r.height = 0;
        for (const auto& x : s) r.height += static_cast<int>(x.get_si());
        r.length2 = squared_length(c, sym, s);
        poset.roots.push_back(std::move(r));
    }
    std::sort(poset.roots.begin(), poset.roots.end(), root_less);
    for (std::size_t u = 0; u < poset.roots.size(); ++u) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector down = poset.roots[u].simple;
            down[i] -= 1;
            if (auto l = poset.find(down)) poset.covers.push_back({*l, u, i});
        }
    }
    poset.maximum = poset.roots.size() - 1;
    if (poset.roots.size() > 1 && poset.roots[poset.maximum].height == poset.roots[poset.maximum - 1].height)
        throw Error(ErrorCode::InvalidArgument, "root poset has no unique maximum (reducible Cartan matrix?)");
    return poset;
}

RootPoset positive_roots(DynkinType type) { return positive_roots_from_cartan(cartan_matrix(type)); }

RootSystemData RootSystemData::from_cartan(const IntMatrix& cartan, std::string label) {
    RootSystemData d;
    d.label = std::move(label);
    d.cartan = cartan;
    d.poset = positive_roots_from_cartan(cartan);
    d.symmetrizer = symmetrize(cartan);
    const std::size_t n = cartan.rows();

    d.highest_root = d.poset.maximum;
    Integer shortest = d.poset.roots[0].length2;
    for (const auto& r : d.poset.roots) shortest = std::min(shortest, r.length2);
    for (std::size_t k = 0; k < d.poset.roots.size(); ++k)
        if (d.poset.roots[k].length2 == shortest) d.highest_short_root = k;

    const PositiveRoot& top = d.highest();
    const PositiveRoot& star = d.highest_short();
    d.marks = {1};
    d.phi = {1};
    d.dual_marks = {1};
    for (std::size_t i = 0; i < n; ++i) {
        d.marks.push_back(top.simple[i]);
        // coroot coefficients: beta^vee = sum beta_i (L_i / L(beta)) alpha_i^vee
        Integer num = top.simple[i] * d.symmetrizer[i] * 2;
        d.phi.push_back(num / top.length2);
        Integer num_star = star.simple[i] * d.symmetrizer[i] * 2;
        d.dual_marks.push_back(num_star / star.length2);
    }

    d.extended_cartan = IntMatrix(n + 1, n + 1);
    d.extended_cartan(0, 0) = 2;
    for (std::size_t j = 0; j < n; ++j) {
        d.extended_cartan(0, j + 1) = -top.weight[j];
        Integer s = 0;
        for (std::size_t k = 0; k < n; ++k) s += d.phi[k + 1] * cartan(j, k);
        d.extended_cartan(j + 1, 0) = -s;
        for (std::size_t k = 0; k < n; ++k) d.extended_cartan(j + 1, k + 1) = cartan(j, k);
    }
    if (!is_zero(d.extended_cartan.apply(d.phi)) || !is_zero(d.extended_cartan.transpose().apply(d.marks)))
        throw Error(ErrorCode::InvalidArgument, "extended Cartan matrix kernel check failed for " + d.label);

    for (std::size_t i = 0; i < n; ++i)
        if (d.dual_marks[i + 1] == 1) d.minuscule_nodes.push_back(i);
    d.coxeter_number = 1;
    for (std::size_t i = 1; i <= n; ++i) d.coxeter_number += d.marks[i];
    d.index_of_connection = abs(determinant(cartan));
    return d;
}

RootSystemData RootSystemData::build(DynkinType type) { return from_cartan(cartan_matrix(type), type.to_string()); }

RootSystemData RootSystemData::dual() const { return from_cartan(cartan.transpose(), label + "^v"); }

std::vector<std::size_t> minuscule_dominant_weights(DynkinType type) { return RootSystemData::build(type).minuscule_nodes; }

Theorem11Report verify_theorem_1_1(DynkinType type) {
    RootSystemData d = RootSystemData::build(type);
    ChipSystem sys = ChipSystem::certify(d.cartan);
    const std::size_t n = d.rank();
    Theorem11Report r;
    r.type = type;
    r.minuscule_nodes = d.minuscule_nodes;
    r.index_of_connection = d.index_of_connection;
    r.superstables = sys.superstable_representatives();
    r.recurrents = sys.recurrent_representatives();
    r.expected_superstables.push_back(IntVector(n, Integer(0)));
    r.expected_recurrents.push_back(d.rho());
    for (auto i : d.minuscule_nodes) {
        r.expected_superstables.push_back(unit_vector(n, i));
        r.expected_recurrents.push_back(sub(d.rho(), unit_vector(n, i)));
    }
    std::sort(r.expected_superstables.begin(), r.expected_superstables.end());
    std::sort(r.expected_recurrents.begin(), r.expected_recurrents.end());
    r.superstables_match = r.superstables == r.expected_superstables;
    r.recurrents_match = r.recurrents == r.expected_recurrents;
    return r;
}

bool burning_configurations_cartan(DynkinType type, const IntVector& b) {
    IntMatrix c = cartan_matrix(type);
    if (b.size() != c.rows()) throw Error(ErrorCode::InvalidArgument, "vector length does not match the rank");
    if (is_zero(b) || !is_nonnegative(b)) return false;
    return LatticeQuotient(c.transpose()).contains(b);
}

RootChain stabilization_chain_from_rho(const RootSystemData& d) {
    ChipSystem sys = ChipSystem::certify(d.cartan);
    const std::size_t n = d.rank();
    RootChain out;
    out.record.counts = IntVector(n);
    std::size_t beta = d.highest_root;
    ChipConfig v = add(d.rho(), d.highest().weight);
    out.states.push_back(v);
    std::vector<std::size_t> descending{beta};
    while (true) {
        const PositiveRoot& r = d.poset.roots[beta];
        std::optional<std::size_t> step;
        std::optional<std::size_t> lower;
        for (std::size_t i = 0; i < n && !step; ++i) {
            if (r.weight[i] <= 0) continue;
            if (r.height == 1) {
                step = i;
                break;
            }
            IntVector down = r.simple;
            down[i] -= 1;
            if (auto l = d.poset.find(down)) {
                step = i;
                lower = l;
            }
        }
        if (!step) throw Error(ErrorCode::InvalidArgument, "no descending step from root " + to_string(r.simple));
        v = sys.topple(v, *step);
        out.states.push_back(v);
        out.record.sequence.push_back(*step);
        out.record.counts[*step] += 1;
        if (!lower) break;
        beta = *lower;
        descending.push_back(beta);
    }
    if (v != d.rho()) throw Error(ErrorCode::InvalidArgument, "chain did not end at rho");
    out.chain.assign(descending.rbegin(), descending.rend());
    return out;
}

Integer count_maximal_chains(const RootPoset& poset) {
    std::vector<Integer> ways(poset.roots.size(), Integer(0));
    for (std::size_t k = 0; k < poset.roots.size(); ++k)
        if (poset.roots[k].height == 1) ways[k] = 1;
    // covers are generated in increasing order of the upper element
    for (const auto& cv : poset.covers) ways[cv.upper] += ways[cv.lower];
    return ways[poset.maximum];
}

IntVector numbers_fire(const IntMatrix& c, const IntVector& u, std::size_t i) {
    if (u.size() != c.rows() || i >= u.size()) throw Error(ErrorCode::InvalidArgument, "numbers game: dimension mismatch");
    if (sgn(u[i]) >= 0)
        throw Error(ErrorCode::NotNegativeAtNode, "coordinate " + std::to_string(i + 1) + " of " + to_string(u) + " is not negative");
    IntVector out = u;
    Integer ui = u[i];
    for (std::size_t j = 0; j < u.size(); ++j) out[j] -= c(i, j) * ui;
    return out;
}

LoopingResult minuscule_toppling_and_looping(const RootSystemData& d, std::size_t node,
                                             const std::vector<std::size_t>& firing_order) {
    const std::size_t n = d.rank();
    if (node >= n) throw Error(ErrorCode::InvalidArgument, "node out of range");
    if (std::find(d.minuscule_nodes.begin(), d.minuscule_nodes.end(), node) == d.minuscule_nodes.end())
        throw Error(ErrorCode::NotMinuscule, "node " + std::to_string(node + 1) + " of " + d.label + " is not minuscule");

    LoopingResult out;
    out.node = node;
    const IntVector lambda = unit_vector(n, node);
    const PositiveRoot& star = d.highest_short();
    IntVector u = sub(lambda, star.weight);
    out.numbers.push_back(u);
    while (true) {
        std::size_t k = out.fired.size();
        std::optional<std::size_t> i;
        if (k < firing_order.size()) {
            i = firing_order[k];
        } else {
            for (std::size_t j = 0; j < n && !i; ++j)
                if (sgn(u[j]) < 0) i = j;
        }
        if (!i) break;
        if (*i >= n) throw Error(ErrorCode::InvalidArgument, "firing order names a node out of range");
        if (sgn(u[*i]) < 0 && u[*i] != -1)
            throw Error(ErrorCode::NotMinuscule, "fired coordinate is " + u[*i].get_str() + ", expected -1");
        u = numbers_fire(d.cartan, u, *i);
        out.fired.push_back(*i);
        out.numbers.push_back(u);
    }
    if (u != lambda) throw Error(ErrorCode::InvalidArgument, "numbers game ended at " + to_string(u) + ", not at lambda");
    if (static_cast<int>(out.fired.size()) != star.height)
        throw Error(ErrorCode::InvalidArgument, "numbers game length differs from ht(alpha*)");

    ChipSystem sys = ChipSystem::certify(d.cartan);
    out.start = sub(d.rho(), lambda);
    for (const auto& w : out.numbers) out.toppling.push_back(sub(d.rho(), w));
    if (out.toppling.front() != add(out.start, star.weight))
        throw Error(ErrorCode::InvalidArgument, "toppling sequence does not start at (rho - lambda) + alpha*");
    for (std::size_t k = 0; k < out.fired.size(); ++k)
        if (sys.topple(out.toppling[k], out.fired[k]) != out.toppling[k + 1])
            throw Error(ErrorCode::InvalidToppling, "toppling step " + std::to_string(k + 1) + " does not match");

    RootSystemData dual = d.dual();
    out.game_matrix = dual.extended_cartan.transpose();
    out.padding = d.dual_marks;
    if (!is_zero(out.game_matrix.apply(out.padding)))
        throw Error(ErrorCode::InvalidArgument, "padding vector is not in the kernel of the game matrix");
    auto pad = [&](const IntVector& w) {
        IntVector p{Integer(0)};
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += d.dual_marks[i + 1] * w[i];
            p.push_back(w[i]);
        }
        p[0] = -s;
        return p;
    };
    IntVector cur = pad(lambda);
    out.padded.push_back(cur);
    cur = numbers_fire(out.game_matrix, cur, 0);
    out.padded.push_back(cur);
    if (cur != pad(out.numbers[0])) throw Error(ErrorCode::InvalidArgument, "padded step at node 0 does not reach u^(0)");
    for (std::size_t k = 0; k < out.fired.size(); ++k) {
        cur = numbers_fire(out.game_matrix, cur, out.fired[k] + 1);
        if (cur != pad(out.numbers[k + 1]))
            throw Error(ErrorCode::InvalidArgument, "padded step " + std::to_string(k + 1) + " diverges");
        out.padded.push_back(cur);
    }
    return out;
}

}  // namespace critlib
