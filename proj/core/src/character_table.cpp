#include "critlib/character_table.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace critlib {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_table_sources();
}

using nlohmann::json;

Integer CharacterTable::degree(std::size_t i) const {
    const Cyclotomic& v = characters.at(i).at(0);
    if (!v.is_integer()) throw Error(ErrorCode::CorruptTable, name + ": degree of character " + std::to_string(i) + " is not an integer");
    return v.rational_value().get_num();
}

IntVector CharacterTable::degrees() const {
    IntVector d;
    for (std::size_t i = 0; i < num_irreducibles(); ++i) d.push_back(degree(i));
    return d;
}

std::size_t CharacterTable::power_class(std::size_t c, const Integer& k) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), exponent);
    if (r == 0) return 0;
    return power_map.at(c).at(r.get_ui() - 1);
}

std::vector<Cyclotomic> CharacterTable::evaluate(const VirtualCharacter& gamma) const {
    if (gamma.size() != num_irreducibles())
        throw Error(ErrorCode::InvalidArgument, "virtual character has " + std::to_string(gamma.size()) + " coefficients, table has " +
                                                    std::to_string(num_irreducibles()) + " irreducibles");
    std::vector<Cyclotomic> out(num_classes(), Cyclotomic(exponent));
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (sgn(gamma[i]) == 0) continue;
        Rational c(gamma[i]);
        for (std::size_t k = 0; k < num_classes(); ++k) out[k] += characters[i][k] * c;
    }
    return out;
}

void CharacterTable::validate() const {
    auto fail = [&](const std::string& why) { throw Error(ErrorCode::CorruptTable, name + ": " + why); };
    const std::size_t r = num_classes();
    if (r == 0) fail("no classes");
    if (classes[0].size != 1 || classes[0].order != 1) fail("class 0 is not the identity");
    Integer total = 0;
    for (const auto& c : classes) {
        if (c.size <= 0 || !mpz_divisible_p(group_order.get_mpz_t(), c.size.get_mpz_t())) fail("bad class size");
        if (c.order == 0 || exponent % c.order != 0) fail("class order does not divide the exponent");
        total += c.size;
    }
    if (total != group_order) fail("class sizes sum to " + total.get_str() + ", not " + group_order.get_str());
    if (power_map.size() != r) fail("power map has wrong number of rows");
    for (std::size_t c = 0; c < r; ++c) {
        if (power_map[c].size() != exponent) fail("power map row has wrong length");
        if (power_map[c][0] != c) fail("power_map(c, 1) != c");
        for (auto t : power_map[c])
            if (t >= r) fail("power map entry out of range");
        if (power_map[c][classes[c].order - 1] != 0) fail("g^order(g) is not the identity");
        for (unsigned k = 1; k < classes[c].order; ++k)
            if (power_map[c][k - 1] == 0) fail("class order is not minimal");
    }
    if (characters.size() != r) fail("table is not square");
    for (const auto& row : characters) {
        if (row.size() != r) fail("character row has wrong length");
        for (const auto& v : row)
            if (v.order() != exponent) fail("character value lives in the wrong cyclotomic field");
    }
    for (const auto& v : characters[0])
        if (!(v == Rational(1))) fail("row 0 is not the trivial character");
    Integer sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
        Integer d = degree(i);
        if (d <= 0) fail("nonpositive degree");
        sq += d * d;
    }
    if (sq != group_order) fail("sum of squared degrees is " + sq.get_str());

    std::vector<std::vector<Cyclotomic>> conj(r);
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& v : characters[i]) conj[i].push_back(v.conj());
    const Rational inv_order(1, group_order);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Cyclotomic s(exponent);
            for (std::size_t c = 0; c < r; ++c) s += characters[i][c] * conj[j][c] * Rational(classes[c].size);
            s *= inv_order;
            if (!(s == Rational(i == j ? 1 : 0)))
                fail("rows " + std::to_string(i) + " and " + std::to_string(j) + " are not orthonormal");
        }
    if (natural_gamma) {
        if (natural_gamma->size() != r) fail("natural_gamma has wrong length");
        if (!is_nonnegative(*natural_gamma)) fail("natural_gamma has a negative coefficient");
    }
}

namespace {

// Accepts JSON integers and decimal strings.
Integer json_integer(const json& x) {
    if (x.is_string()) return Integer(x.get<std::string>());
    if (x.is_number_integer()) return Integer(x.dump());
    throw std::invalid_argument("expected an integer, got " + x.dump());
}

}  // namespace

CharacterTable CharacterTable::from_json(std::string_view text) {
    CharacterTable t;
    try {
        json j = json::parse(text);
        t.name = j.at("name").get<std::string>();
        t.group_order = json_integer(j.at("order"));
        t.exponent = j.at("exponent").get<unsigned>();
        if (t.exponent == 0) throw Error(ErrorCode::CorruptTable, t.name + ": exponent must be positive");
        for (const auto& c : j.at("classes")) {
            ConjugacyClass cc;
            cc.label = c.at("label").get<std::string>();
            cc.size = json_integer(c.at("size"));
            cc.order = c.value("order", 0u);
            t.classes.push_back(cc);
        }
        for (const auto& row : j.at("power_map")) t.power_map.push_back(row.get<std::vector<std::size_t>>());
        for (std::size_t c = 0; c < t.classes.size() && c < t.power_map.size(); ++c)
            if (t.classes[c].order == 0) {
                // derive the element order from the power map when omitted
                unsigned k = 1;
                while (k <= t.exponent && t.power_map[c][k - 1] != 0) ++k;
                t.classes[c].order = k;
            }
        for (const auto& row : j.at("characters")) {
            std::vector<Cyclotomic> values;
            for (const auto& v : row) {
                Integer den = json_integer(v.at("den"));
                if (den <= 0) throw Error(ErrorCode::CorruptTable, t.name + ": nonpositive denominator");
                RatVector coeffs;
                for (const auto& x : v.at("num")) {
                    Rational q(json_integer(x), den);
                    q.canonicalize();
                    coeffs.push_back(q);
                }
                values.push_back(Cyclotomic::from_powers(t.exponent, coeffs));
            }
            t.characters.push_back(std::move(values));
        }
        if (j.contains("natural_gamma") && !j.at("natural_gamma").is_null()) {
            VirtualCharacter g;
            for (const auto& x : j.at("natural_gamma")) g.push_back(json_integer(x));
            t.natural_gamma = g;
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptTable, std::string("malformed character table JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::CorruptTable, std::string("malformed number in character table: ") + e.what());
    }
    t.validate();
    return t;
}

std::string CharacterTable::to_json() const {
    json j;
    j["name"] = name;
    j["order"] = json::parse(group_order.get_str());
    j["exponent"] = exponent;
    j["classes"] = json::array();
    for (const auto& c : classes)
        j["classes"].push_back({{"label", c.label}, {"size", json::parse(c.size.get_str())}, {"order", c.order}});
    j["power_map"] = power_map;
    j["characters"] = json::array();
    for (const auto& row : characters) {
        json jr = json::array();
        for (const auto& v : row) {
            Integer den = 1;
            for (const auto& q : v.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            json num = json::array();
            for (const auto& q : v.coeffs()) num.push_back(json::parse(Rational(q * den).get_num().get_str()));
            jr.push_back({{"num", num}, {"den", json::parse(den.get_str())}});
        }
        j["characters"].push_back(jr);
    }
    if (natural_gamma) {
        json g = json::array();
        for (const auto& x : *natural_gamma) g.push_back(json::parse(x.get_str()));
        j["natural_gamma"] = g;
    }
    return j.dump();
}

std::vector<IntVector> abelian_elements(const IntVector& invariants) {
    std::vector<IntVector> out;
    IntVector a(invariants.size(), Integer(0));
    for (const auto& n : invariants)
        if (n <= 0) throw Error(ErrorCode::InvalidArgument, "abelian invariants must be positive");
    while (true) {
        out.push_back(a);
        std::size_t i = a.size();
        while (true) {
            if (i == 0) return out;
            --i;
            a[i] += 1;
            if (a[i] < invariants[i]) break;
            a[i] = 0;
        }
    }
}

CharacterTable abelian_character_table(const IntVector& invariants) {
    auto elems = abelian_elements(invariants);
    const std::size_t r = elems.size();
    if (r > 4096) throw Error(ErrorCode::TooLarge, "abelian group too large for a character table");
    unsigned n = 1;
    for (const auto& x : invariants) n = std::lcm(n, static_cast<unsigned>(x.get_ui()));

    CharacterTable t;
    t.name = "abelian";
    for (std::size_t i = 0; i < invariants.size(); ++i) t.name += (i ? "x" : "-") + invariants[i].get_str();
    t.group_order = static_cast<unsigned long>(r);
    t.exponent = n;

    std::map<IntVector, std::size_t> index;
    for (std::size_t k = 0; k < r; ++k) index[elems[k]] = k;
    for (const auto& a : elems) {
        ConjugacyClass c;
        c.size = 1;
        unsigned ord = 1;
        std::string label = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned ni = static_cast<unsigned>(invariants[i].get_ui());
            unsigned ai = static_cast<unsigned>(a[i].get_ui());
            ord = std::lcm(ord, ni / std::gcd(ai, ni));
            label += (i ? "," : "") + a[i].get_str();
        }
        c.label = label + ")";
        c.order = ord;
        t.classes.push_back(c);
        std::vector<std::size_t> pm;
        for (unsigned k = 1; k <= n; ++k) {
            IntVector b(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) b[i] = (a[i] * k) % invariants[i];
            pm.push_back(index.at(b));
        }
        t.power_map.push_back(std::move(pm));
    }
    for (const auto& b : elems) {
        std::vector<Cyclotomic> row;
        for (const auto& a : elems) {
            Integer e = 0;
            for (std::size_t i = 0; i < a.size(); ++i) e += a[i] * b[i] * (Integer(n) / invariants[i]);
            e %= n;
            row.push_back(Cyclotomic::root_of_unity(n, static_cast<unsigned>(e.get_ui())));
        }
        t.characters.push_back(std::move(row));
    }
    return t;
}

std::vector<BundledGroup> bundled_groups() {
    std::vector<BundledGroup> out;
    for (int m = 1; m <= 12; ++m)
        out.push_back({"cyclic-" + std::to_string(m), "Z/" + std::to_string(m) + " in SL2 via diag(z, z^-1)"});
    for (int m = 2; m <= 8; ++m)
        out.push_back({"binary-dihedral-" + std::to_string(m), "binary dihedral group of order " + std::to_string(4 * m)});
    out.push_back({"binary-tetrahedral", "binary tetrahedral group, order 24"});
    out.push_back({"binary-octahedral", "binary octahedral group, order 48"});
    out.push_back({"binary-icosahedral", "binary icosahedral group, order 120"});
    out.push_back({"A4", "alternating group A4 in SO3"});
    out.push_back({"S4", "symmetric group S4 in SO3"});
    out.push_back({"A5", "alternating group A5 in SO3"});
    return out;
}

namespace {

std::shared_ptr<const CharacterTable> make_group(std::string_view name) {
    auto parse_list = [&](std::string_view body, char sep) {
        IntVector out;
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t end = body.find(sep, start);
            if (end == std::string_view::npos) end = body.size();
            std::string piece(body.substr(start, end - start));
            if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::UnknownGroup, "cannot parse group name '" + std::string(name) + "'");
            out.push_back(Integer(piece));
            if (out.back() <= 0) throw Error(ErrorCode::UnknownGroup, "group orders must be positive in '" + std::string(name) + "'");
            start = end + 1;
        }
        return out;
    };
    if (name.rfind("cyclic-", 0) == 0) {
        IntVector m = parse_list(name.substr(7), ',');
        if (m.size() != 1) throw Error(ErrorCode::UnknownGroup, std::string(name));
        CharacterTable t = abelian_character_table(m);
        t.name = std::string(name);
        std::size_t mm = m[0].get_ui();
        if (mm >= 2) {
            VirtualCharacter g(mm, Integer(0));
            g[1] += 1;
            g[mm - 1] += 1;
            t.natural_gamma = g;
        }
        t.validate();
        return std::make_shared<const CharacterTable>(std::move(t));
    }
    if (name.rfind("abelian-", 0) == 0) {
        CharacterTable t = abelian_character_table(parse_list(name.substr(8), 'x'));
        t.name = std::string(name);
        t.validate();
        return std::make_shared<const CharacterTable>(std::move(t));
    }
    for (const auto& [key, text] : detail::bundled_table_sources())
        if (key == name) return std::make_shared<const CharacterTable>(CharacterTable::from_json(text));
    throw Error(ErrorCode::UnknownGroup, "no bundled group named '" + std::string(name) + "'");
}

}  // namespace

std::shared_ptr<const CharacterTable> load_group(std::string_view name) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CharacterTable>, std::less<>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(name); it != cache.end()) return it->second;
    }
    auto t = make_group(name);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::string(name), t).first->second;
}

}  // namespace critlib
