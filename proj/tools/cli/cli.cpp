#include "critlib_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "critlib/chipfire.hpp"
#include "critlib/errors.hpp"
#include "critlib/mckay.hpp"
#include "critlib/rootsys.hpp"
#include "critlib/serialize.hpp"
#include "critlib_acceptance/acceptance.hpp"
#include "critlib_cli/layout.hpp"
#include "json.hpp"

namespace critlib::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    json doc = json::object();
    std::vector<std::string> text;
    bool ok = true;

    void line(const std::string& s) { text.push_back(s); }
};

json jint(const Integer& x) { return x.get_str(); }

json jvec(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json jvecs(const std::vector<IntVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(jvec(v));
    return a;
}

json jmat(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
    return a;
}

json jnodes(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

json jgroup(const AbelianGroupInvariants& g) {
    return {{"invariants", g.to_string()}, {"free_rank", g.free_rank}, {"torsion", jvec(g.torsion)}};
}

std::string nodes_text(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k] + 1;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntVector parse_vector(const std::string& text, const std::string& flag) {
    try {
        return vector_from_text(text);
    } catch (const Error&) {
        throw UsageError(flag + " expects comma-separated integers, got '" + text + "'");
    }
}

std::size_t parse_node(long node, std::size_t rank) {
    if (node < 1 || static_cast<std::size_t>(node) > rank)
        throw UsageError("--node must lie in 1.." + std::to_string(rank));
    return static_cast<std::size_t>(node - 1);
}

// ------------------------------------------------------------------ matrix

struct MatrixArgs {
    std::string action;
    std::string input;
    std::string config;
    std::string b;
    std::string strategy = "queue";
};

Report run_matrix(const MatrixArgs& a) {
    const std::string text = read_file(a.input);
    IntMatrix c;
    std::optional<IntVector> file_config;
    if (text.find("\"matrix\"") != std::string::npos) {
        auto [m, v] = config_from_json(text);
        c = m;
        file_config = v;
    } else {
        c = matrix_from_text(text);
    }
    Report r;
    r.doc["operation"] = "matrix." + a.action;
    r.doc["inputs"] = {{"matrix", jmat(c)}};
    ChipSystem sys = ChipSystem::certify(c);
    json& out = r.doc["outputs"];

    if (a.action == "check") {
        json w = json::array();
        std::string ws = "[";
        for (const auto& q : sys.certificate().witness_r) {
            w.push_back(q.get_str());
            ws += (ws.size() > 1 ? "," : "") + q.get_str();
        }
        out = {{"accepted", true}, {"witness_r", w}, {"det", jint(sys.det())}, {"inverse_nonnegative", sys.certificate().inverse_nonneg}};
        r.line("accepted: avalanche-finite");
        r.line("witness r = " + ws + "]");
        r.line("det = " + sys.det().get_str());
    } else if (a.action == "stabilize") {
        IntVector v;
        if (!a.config.empty()) v = parse_vector(a.config, "--config");
        else if (file_config) v = *file_config;
        else throw UsageError("stabilize needs --config or a config JSON input");
        FiringStrategy st = a.strategy == "max-surplus" ? FiringStrategy::MaxSurplus : FiringStrategy::Queue;
        auto s = sys.stabilize(v, st);
        r.doc["inputs"]["config"] = jvec(v);
        out = {{"stable", jvec(s.stable)},
               {"firings", s.record.sequence.size()},
               {"record", json::parse(firing_record_to_json(s.record))}};
        r.line("stable = " + to_string(s.stable));
        r.line("firings = " + std::to_string(s.record.sequence.size()));
        r.line("sequence = " + nodes_text(s.record.sequence));
        r.line("counts = " + to_string(s.record.counts));
    } else if (a.action == "recurrents" || a.action == "superstables") {
        auto list = a.action == "recurrents" ? sys.recurrent_representatives() : sys.superstable_representatives();
        out = {{a.action, jvecs(list)}, {"count", list.size()}};
        for (const auto& v : list) r.line(to_string(v));
    } else if (a.action == "critical-group") {
        auto g = sys.quotient().invariants();
        out = jgroup(g);
        out["order"] = jint(g.torsion_order());
        r.line(g.to_string());
    } else if (a.action == "burning") {
        if (a.b.empty()) throw UsageError("burning needs --b");
        IntVector b = parse_vector(a.b, "--b");
        auto cert = sys.check_burning(b);
        r.doc["inputs"]["b"] = jvec(b);
        out = {{"burning", true}, {"z", jvec(cert.z)}, {"reached", jnodes(cert.reached)}};
        r.line("burning configuration: b = C^t z with z = " + to_string(cert.z));
    } else if (a.action == "zero-coset") {
        auto v = sys.zero_coset_recurrent();
        out = {{"recurrent", jvec(v)}};
        r.line(to_string(v));
    }
    return r;
}

// ------------------------------------------------------------------ root

struct RootArgs {
    std::string action;
    std::string type;
    long node = 0;
    std::string b;
};

Report run_root(const RootArgs& a) {
    DynkinType t = DynkinType::parse(a.type);
    Report r;
    r.doc["operation"] = "root." + a.action;
    r.doc["inputs"] = {{"type", t.to_string()}};
    json& out = r.doc["outputs"];
    auto show = [&](const IntVector& v, bool padded = false) { return dynkin_layout(t, v, padded); };
    auto push_state = [&](const IntVector& v, bool padded = false) {
        std::string s = show(v, padded);
        if (s.find('\n') != std::string::npos) {
            std::istringstream in(s);
            for (std::string l; std::getline(in, l);) r.line(l);
            r.line("");
        } else {
            r.line(s);
        }
    };

    if (a.action == "cartan") {
        IntMatrix c = cartan_matrix(t);
        out = {{"cartan", jmat(c)}};
        r.line(to_string(c));
        return r;
    }
    if (a.action == "verify-thm1") {
        auto rep = verify_theorem_1_1(t);
        r.ok = rep.passed();
        out = {{"passed", rep.passed()},
               {"minuscule_nodes", jnodes(rep.minuscule_nodes)},
               {"index_of_connection", jint(rep.index_of_connection)},
               {"superstables", jvecs(rep.superstables)},
               {"recurrents", jvecs(rep.recurrents)}};
        std::string sup = "0", rec = "1";
        for (auto i : rep.minuscule_nodes) {
            sup += ", e" + std::to_string(i + 1);
            rec += ", 1-e" + std::to_string(i + 1);
        }
        r.line(t.to_string() + ": " + (rep.passed() ? "pass" : "FAIL"));
        r.line("superstables {" + sup + "}");
        r.line("recurrents {" + rec + "}");
        return r;
    }
    if (a.action == "burning-test") {
        if (a.b.empty()) throw UsageError("burning-test needs --b");
        IntVector b = parse_vector(a.b, "--b");
        bool ok = burning_configurations_cartan(t, b);
        r.doc["inputs"]["b"] = jvec(b);
        out = {{"burning", ok}};
        r.ok = ok;
        r.line(std::string(ok ? "burning" : "not burning") + ": " + to_string(b));
        return r;
    }

    auto d = RootSystemData::build(t);
    if (a.action == "roots") {
        json roots = json::array();
        for (const auto& root : d.poset.roots) {
            roots.push_back({{"simple", jvec(root.simple)}, {"weight", jvec(root.weight)}, {"height", root.height},
                             {"length2", jint(root.length2)}});
            r.line("ht " + std::to_string(root.height) + "  simple " + to_string(root.simple) + "  weight " + to_string(root.weight));
        }
        out = {{"roots", roots},
               {"count", d.poset.roots.size()},
               {"highest_root", jvec(d.highest().simple)},
               {"highest_short_root", jvec(d.highest_short().simple)},
               {"coxeter_number", jint(d.coxeter_number)}};
    } else if (a.action == "minuscule") {
        json ws = json::array();
        for (auto i : d.minuscule_nodes) ws.push_back(jvec(unit_vector(d.rank(), i)));
        out = {{"nodes", jnodes(d.minuscule_nodes)}, {"weights", ws}, {"index_of_connection", jint(d.index_of_connection)}};
        r.line("minuscule nodes: " + (d.minuscule_nodes.empty() ? std::string("none") : nodes_text(d.minuscule_nodes)));
        r.line("index of connection: " + d.index_of_connection.get_str());
    } else if (a.action == "chain-from-rho") {
        auto ch = stabilization_chain_from_rho(d);
        json roots = json::array();
        for (auto k : ch.chain) roots.push_back(jvec(d.poset.roots[k].simple));
        out = {{"chain", roots},
               {"states", jvecs(ch.states)},
               {"sequence", jnodes(ch.record.sequence)},
               {"counts", jvec(ch.record.counts)},
               {"maximal_chains", jint(count_maximal_chains(d.poset))}};
        for (const auto& s : ch.states) push_state(s);
        r.line("fired " + nodes_text(ch.record.sequence));
    } else if (a.action == "looping") {
        if (a.node == 0) throw UsageError("looping needs --node");
        auto l = minuscule_toppling_and_looping(d, parse_node(a.node, d.rank()));
        r.doc["inputs"]["node"] = a.node;
        out = {{"fired", jnodes(l.fired)},
               {"numbers", jvecs(l.numbers)},
               {"toppling", jvecs(l.toppling)},
               {"padding", jvec(l.padding)},
               {"game_matrix", jmat(l.game_matrix)},
               {"padded", jvecs(l.padded)}};
        r.line("fired " + nodes_text(l.fired));
        r.line("padded sequence [u0, u1, ...]:");
        for (const auto& s : l.padded) push_state(s, true);
    }
    return r;
}

// ------------------------------------------------------------------ mckay

struct McKayArgs {
    std::string action;
    std::string group;
    std::string table;
    std::string gamma;
    std::string invariants;
    std::string generators;
};

McKayData load_mckay(const McKayArgs& a, Report& r) {
    std::shared_ptr<const CharacterTable> t;
    if (!a.table.empty()) {
        auto tab = CharacterTable::from_json(read_file(a.table));
        tab.validate();
        t = std::make_shared<const CharacterTable>(std::move(tab));
    } else if (!a.group.empty()) {
        t = load_group(a.group);
    } else {
        throw UsageError(a.action + " needs --group or --table");
    }
    r.doc["inputs"]["group"] = t->name;
    if (!a.gamma.empty()) {
        IntVector g = parse_vector(a.gamma, "--gamma");
        r.doc["inputs"]["gamma"] = jvec(g);
        return mckay_cartan(t, g);
    }
    return mckay_cartan(t);
}

Report run_mckay(const McKayArgs& a) {
    Report r;
    r.doc["operation"] = "mckay." + a.action;
    r.doc["inputs"] = json::object();
    json& out = r.doc["outputs"];

    if (a.action == "cayley") {
        if (a.invariants.empty() || a.generators.empty()) throw UsageError("cayley needs --invariants and --generators");
        IntVector inv = parse_vector(a.invariants, "--invariants");
        std::vector<IntVector> gens;
        // generators are comma separated; coordinates inside one generator are ':' separated
        std::stringstream ss(a.generators);
        for (std::string item; std::getline(ss, item, ',');) {
            for (auto& ch : item) if (ch == ':') ch = ' ';
            gens.push_back(parse_vector(item, "--generators"));
        }
        auto rep = cayley_digraph_check(inv, gens);
        r.doc["inputs"] = {{"invariants", jvec(inv)}, {"generators", jvecs(gens)}};
        out = {{"group_order", jint(rep.group_order)},
               {"arborescences", jint(rep.arborescences)},
               {"r", rep.r},
               {"critical", jgroup(rep.critical)},
               {"laplacian_matches_mckay", rep.laplacian_matches_mckay},
               {"cyclic_pm_pair", rep.cyclic_pm_pair},
               {"passed", rep.passed}};
        r.ok = rep.passed;
        r.line("|A| = " + rep.group_order.get_str() + ", r = " + std::to_string(rep.r));
        r.line("arborescences = " + rep.arborescences.get_str());
        r.line("K = " + rep.critical.to_string());
        r.line(std::string("check: ") + (rep.passed ? "pass" : "FAIL"));
        return r;
    }

    McKayData d = load_mckay(a, r);
    if (a.action == "build") {
        auto f = is_faithful(*d.table, d.gamma);
        out = {{"n", jint(d.n)},
               {"gamma", jvec(d.gamma)},
               {"M", jmat(d.M)},
               {"C_ext", jmat(d.C_ext)},
               {"C", jmat(d.C)},
               {"degrees", jvec(d.delta_e)},
               {"faithful", f.faithful},
               {"in_SL", is_in_SL(d)}};
        r.line("n = " + d.n.get_str());
        r.line("M = " + to_string(d.M));
        r.line("C~ = " + to_string(d.C_ext));
        r.line("C = " + to_string(d.C));
        r.line(std::string("faithful: ") + (f.faithful ? "yes" : "no") + ", in SL: " + (is_in_SL(d) ? "yes" : "no"));
    } else if (a.action == "critical-group") {
        auto p = critical_group_presentations(d);
        auto k = critical_group(d);
        out = jgroup(k);
        out["order"] = jint(k.torsion_order());
        out["presentations_agree"] = p.agree();
        r.line(k.to_string());
    } else if (a.action == "verify-abelianization") {
        auto rep = abelianization_map(d);
        out = {{"critical", jgroup(rep.critical)},
               {"linear_characters", jgroup(rep.linear_group)},
               {"surjective", rep.surjective},
               {"isomorphism", rep.isomorphism},
               {"pi", jnodes(rep.pi)}};
        r.line("K = " + rep.critical.to_string() + ", degree-1 characters = " + rep.linear_group.to_string());
        r.line(rep.isomorphism ? "isomorphism" : (rep.surjective ? "surjective, not injective" : "not surjective"));
    } else if (a.action == "rng-table") {
        RepresentationRng rng(d);
        auto gens = rng.generators();
        json g = json::array(), table = json::array();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            g.push_back({{"name", "u" + std::to_string(i + 1)}, {"vector", jvec(gens[i])}, {"zero", rng.is_zero(gens[i])}});
            json row = json::array();
            for (std::size_t j = 0; j < gens.size(); ++j) row.push_back(jvec(rng.multiply(gens[i], gens[j])));
            table.push_back(row);
        }
        auto inv = rng.ideal_invariants();
        out = {{"ideal", jgroup(inv)}, {"generators", g}, {"products", table}};
        r.line("I(gamma) = " + inv.to_string());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i; j < gens.size(); ++j) {
                auto p = rng.multiply(gens[i], gens[j]);
                r.line("u" + std::to_string(i + 1) + " * u" + std::to_string(j + 1) + " = " +
                       (rng.is_zero(p) ? std::string("0") : to_string(p)));
            }
    }
    return r;
}

// ------------------------------------------------------------------ verify-all

Report run_verify_all(const std::vector<std::string>& only, bool timing) {
    Report r;
    r.doc["operation"] = "verify-all";
    r.doc["inputs"] = {{"only", only}};
    json crit = json::array();
    bool all = true;
    for (int id : acceptance::select_criteria(only)) {
        auto c = acceptance::run_criterion(id);
        json e = {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"failures", c.failures}, {"notes", c.notes}};
        if (timing) e["seconds"] = c.seconds;
        crit.push_back(e);
        all = all && c.passed;
        char buf[64];
        std::snprintf(buf, sizeof buf, " (%.2f s)", c.seconds);
        r.line(std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + ". " + c.name + (timing ? buf : ""));
        for (const auto& f : c.failures) r.line("     " + f);
    }
    r.doc["outputs"] = {{"criteria", crit}, {"passed", all}};
    r.ok = all;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact chip-firing on avalanche-finite matrices, root systems and McKay-Cartan matrices", "critlib"};
    app.require_subcommand(1, 1);
    std::string format = "text";
    std::string output;
    bool timing = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("-o,--output", output, "Write the report to a file instead of stdout");
    app.add_flag("--timing", timing, "Include wall-clock timings (excluded by default for reproducible output)");

    MatrixArgs ma;
    auto* matrix = app.add_subcommand("matrix", "Chip-firing on a matrix read from a file");
    matrix->fallthrough();
    matrix->add_option("action", ma.action)
        ->required()
        ->check(CLI::IsMember({"check", "stabilize", "recurrents", "superstables", "critical-group", "burning", "zero-coset"}));
    matrix->add_option("-i,--input", ma.input, "Matrix JSON, config JSON, or whitespace text")->required();
    matrix->add_option("--config", ma.config, "Chip configuration, e.g. 2,2,1");
    matrix->add_option("--b", ma.b, "Burning candidate, e.g. 0,0,1");
    matrix->add_option("--strategy", ma.strategy)->check(CLI::IsMember({"queue", "max-surplus"}));

    RootArgs ra;
    auto* root = app.add_subcommand("root", "Root-system Cartan matrices, toppling chains and numbers games");
    root->fallthrough();
    root->add_option("action", ra.action)
        ->required()
        ->check(CLI::IsMember({"cartan", "roots", "minuscule", "verify-thm1", "chain-from-rho", "looping", "burning-test"}));
    root->add_option("type", ra.type, "Type such as A5, E6, C4")->required();
    root->add_option("--node", ra.node, "1-based node");
    root->add_option("--b", ra.b, "Burning candidate");

    McKayArgs ka;
    auto* mckay = app.add_subcommand("mckay", "McKay-Cartan matrices of finite-group representations");
    mckay->fallthrough();
    mckay->add_option("action", ka.action)
        ->required()
        ->check(CLI::IsMember({"build", "critical-group", "verify-abelianization", "rng-table", "cayley"}));
    mckay->add_option("--group", ka.group, "Bundled group name, e.g. binary-icosahedral, cyclic-5, abelian-2x2");
    mckay->add_option("--table", ka.table, "Character table JSON file");
    mckay->add_option("--gamma", ka.gamma, "Coefficients of gamma on the irreducibles");
    mckay->add_option("--invariants", ka.invariants, "Abelian group invariants, e.g. 2,2");
    mckay->add_option("--generators", ka.generators, "Generators, comma separated; coordinates joined by ':'");

    std::vector<std::string> only;
    std::string json_path;
    auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
    verify->fallthrough();
    verify->add_option("--only", only, "Criterion numbers or module names")->delimiter(',');
    verify->add_option("--json", json_path, "Also write the JSON summary to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "critlib: " << e.what() << "\n";
        return 2;
    }

    try {
        Report r;
        if (*matrix) r = run_matrix(ma);
        else if (*root) r = run_root(ra);
        else if (*mckay) r = run_mckay(ka);
        else r = run_verify_all(only, timing);

        r.doc["passed"] = r.ok;
        std::string rendered;
        if (format == "json") {
            rendered = r.doc.dump(2) + "\n";
        } else {
            for (const auto& l : r.text) rendered += l + "\n";
        }
        if (!json_path.empty()) {
            std::ofstream f(json_path);
            if (!f) throw UsageError("cannot write " + json_path);
            f << r.doc.dump(2) << "\n";
        }
        if (!output.empty()) {
            std::ofstream f(output);
            if (!f) throw UsageError("cannot write " + output);
            f << rendered;
        } else {
            out << rendered;
        }
        return r.ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "critlib: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "critlib: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    }
}

}  // namespace critlib::cli
