#include "critlib/serialize.hpp"

#include <sstream>

#include "critlib/errors.hpp"
#include "json.hpp"

namespace critlib {

using json = nlohmann::json;

namespace {

Integer parse_integer(const json& j) {
    try {
        if (j.is_string()) return Integer(j.get<std::string>());
        if (j.is_number_integer()) return Integer(j.dump());
    } catch (const std::invalid_argument&) {
    }
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json vector_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

IntVector vector_from(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array");
    IntVector v;
    for (const auto& x : j) v.push_back(parse_integer(x));
    return v;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from(const json& j) {
    const json& e = j.is_array() ? j : j.at("entries");
    std::vector<IntVector> rows;
    for (const auto& r : e) rows.push_back(vector_from(r));
    IntMatrix m = IntMatrix::from_rows(rows);
    if (j.is_object()) {
        if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
            throw Error(ErrorCode::ParseError, "row count does not match entries");
        if (j.contains("cols") && !rows.empty() && j.at("cols").get<std::size_t>() != m.cols())
            throw Error(ErrorCode::ParseError, "column count does not match entries");
    }
    return m;
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

std::string matrix_to_json(const IntMatrix& m) { return matrix_json(m).dump(); }

IntMatrix matrix_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] { return matrix_from(j); });
}

std::string config_to_json(const IntMatrix& m, const ChipConfig& v) {
    return json{{"matrix", matrix_json(m)}, {"config", vector_json(v)}}.dump();
}

std::pair<IntMatrix, ChipConfig> config_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] { return std::make_pair(matrix_from(j.at("matrix")), vector_from(j.at("config"))); });
}

std::string firing_record_to_json(const FiringRecord& r) {
    json seq = json::array();
    for (auto i : r.sequence) seq.push_back(i + 1);
    return json{{"sequence", seq}, {"counts", vector_json(r.counts)}}.dump();
}

FiringRecord firing_record_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] {
        FiringRecord r;
        for (const auto& x : j.at("sequence")) {
            auto i = x.get<long>();
            if (i < 1) throw Error(ErrorCode::ParseError, "node indices are 1-based");
            r.sequence.push_back(static_cast<std::size_t>(i - 1));
        }
        r.counts = vector_from(j.at("counts"));
        return r;
    });
}

namespace {

// Integers separated by whitespace or single commas; brackets are ignored.
IntVector parse_ints(std::string_view text) {
    std::string s(text);
    for (auto& ch : s)
        if (ch == '[' || ch == ']') ch = ' ';
    IntVector v;
    std::string field;
    bool pending_comma = false;
    auto flush = [&](bool from_comma) {
        auto b = field.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            if (from_comma || pending_comma) throw Error(ErrorCode::ParseError, "empty field in \"" + s + "\"");
        } else {
            std::istringstream in(field);
            std::string tok;
            while (in >> tok) {
                try {
                    v.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    throw Error(ErrorCode::ParseError, "not an integer: " + tok);
                }
            }
        }
        field.clear();
        pending_comma = from_comma;
    };
    for (char ch : s) {
        if (ch == ',') flush(true);
        else field += ch;
    }
    if (pending_comma || field.find_first_not_of(" \t\r") != std::string::npos) flush(false);
    return v;
}

}  // namespace

IntVector vector_from_text(std::string_view text) {
    IntVector v = parse_ints(text);
    if (v.empty()) throw Error(ErrorCode::ParseError, "empty vector");
    return v;
}

IntMatrix matrix_from_text(std::string_view text) {
    std::string s(text);
    auto t = s.find_first_not_of(" \t\n");
    if (t != std::string::npos && s[t] == '{') return matrix_from_json(s);
    if (t != std::string::npos && s.compare(t, 2, "[[") == 0) {
        json j = parse(s);
        return guarded([&] { return matrix_from(j); });
    }
    std::vector<IntVector> rows;
    std::string line;
    for (char ch : s + "\n") {
        if (ch == ';' || ch == '\n') {
            IntVector r = parse_ints(line);
            if (!r.empty()) rows.push_back(std::move(r));
            line.clear();
        } else {
            line += ch;
        }
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
    return IntMatrix::from_rows(rows);
}

}  // namespace critlib
