// hyperohm - exact hypercube resistances, preferential-arrangement
// combinatorics, generating functions, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Reports go to stdout; diagnostics to stderr. Output is deterministic:
// identical invocations produce byte-identical bytes.

#include <hyperohm/asymptotics.hpp>
#include <hyperohm/graph.hpp>
#include <hyperohm/laplacian.hpp>
#include <hyperohm/resistance.hpp>
#include <hyperohm/sequences.hpp>
#include <hyperohm/series.hpp>
#include <hyperohm/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using hyperohm::Count;
using hyperohm::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputSpec {
    std::string format = "plain";  // plain | json | csv | bfile
    std::optional<unsigned> precision;
};

// HYPEROHM_MAX_N raises the built-in size guards (resistance-table cap,
// oracle dimension cap).
std::optional<unsigned> env_max_n() {
    const char* raw = std::getenv("HYPEROHM_MAX_N");
    if (!raw) return std::nullopt;
    try {
        long v = std::stol(raw);
        if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid HYPEROHM_MAX_N='" << raw << "'\n";
    return std::nullopt;
}

json value_json(const Rational& v, const OutputSpec& out) {
    json j;
    j["num"] = v.num().str();
    j["den"] = v.den().str();
    if (out.precision) j["approx"] = hyperohm::decimal_string(v, *out.precision);
    return j;
}

std::string plain_value(const Rational& v, const OutputSpec& out) {
    std::string s = v.str();
    if (out.precision) s += " " + hyperohm::decimal_string(v, *out.precision);
    return s;
}

std::string csv_value_fields(const Rational& v, const OutputSpec& out) {
    std::string s = v.num().str() + "," + v.den().str();
    if (out.precision) s += "," + hyperohm::decimal_string(v, *out.precision);
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

[[noreturn]] void usage_error(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    std::exit(kExitUsage);
}

// ---------------------------------------------------------------------------
// resistance
// ---------------------------------------------------------------------------

int run_resistance(unsigned n, std::optional<unsigned> k, bool table, const OutputSpec& out) {
    unsigned cap = env_max_n().value_or(256);
    if (n > cap)
        usage_error("n = " + std::to_string(n) + " exceeds the size cap " +
                    std::to_string(cap) + " (raise HYPEROHM_MAX_N to override)");
    if (out.format == "bfile") usage_error("bfile output is only for integer sequences");

    std::vector<std::pair<unsigned, Rational>> rows;
    if (table) {
        for (unsigned i = 0; i <= n; ++i) rows.emplace_back(i, hyperohm::resistance_pair(n, i));
    } else if (k) {
        rows.emplace_back(*k, hyperohm::resistance_pair(n, *k));
    } else {
        rows.emplace_back(n, hyperohm::resistance_diagonal(n));
    }

    if (out.format == "plain") {
        for (const auto& [i, v] : rows) std::cout << plain_value(v, out) << "\n";
    } else if (out.format == "csv") {
        std::cout << (out.precision ? "k,num,den,approx" : "k,num,den") << "\n";
        for (const auto& [i, v] : rows)
            std::cout << i << "," << csv_value_fields(v, out) << "\n";
    } else {  // json
        json j;
        j["command"] = "resistance";
        j["n"] = n;
        if (table) {
            json arr = json::array();
            for (const auto& [i, v] : rows)
                arr.push_back(json{{"k", i}, {"value", value_json(v, out)}});
            j["table"] = arr;
        } else {
            j["k"] = rows.front().first;
            j["value"] = value_json(rows.front().second, out);
        }
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------

int run_seq(const std::string& name, unsigned count, const OutputSpec& out) {
    const bool rational_seq = (name == "Rn" || name == "Sn");
    std::vector<Rational> values;
    unsigned start_index = 0;

    if (rational_seq) {
        for (unsigned i = 0; i < count; ++i) {
            if (name == "Rn")
                values.push_back(i == 0 ? Rational(0) : hyperohm::resistance_diagonal(i));
            else
                values.push_back(hyperohm::companion_sum(i));
        }
    } else {
        hyperohm::SequenceTable table = hyperohm::sequence_table(name, count);
        start_index = table.start_index;
        for (auto& v : table.values) values.emplace_back(std::move(v));
    }

    if (out.format == "bfile") {
        if (rational_seq) usage_error("bfile output is only for integer sequences");
        for (unsigned i = 0; i < values.size(); ++i)
            std::cout << start_index + i << " " << values[i].str() << "\n";
    } else if (out.format == "plain") {
        for (unsigned i = 0; i < values.size(); ++i)
            std::cout << (i ? " " : "") << plain_value(values[i], out);
        std::cout << "\n";
    } else if (out.format == "csv") {
        std::cout << (out.precision ? "index,num,den,approx" : "index,num,den") << "\n";
        for (unsigned i = 0; i < values.size(); ++i)
            std::cout << start_index + i << "," << csv_value_fields(values[i], out) << "\n";
    } else {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(value_json(v, out));
        json j;
        j["command"] = "seq";
        j["name"] = name;
        j["start"] = start_index;
        j["values"] = arr;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// effres
// ---------------------------------------------------------------------------

int run_effres(const std::string& path, unsigned a, unsigned b, const OutputSpec& out) {
    if (out.format == "bfile") usage_error("bfile output is only for integer sequences");
    std::ifstream in(path);
    if (!in) usage_error("cannot open graph file '" + path + "'");
    hyperohm::WeightedGraph g = [&] {
        try {
            return hyperohm::parse_edge_list(in);
        } catch (const std::exception& e) {
            usage_error(std::string(e.what()));
        }
    }();

    Rational v;
    try {
        v = hyperohm::effective_resistance(g, a, b);
    } catch (const hyperohm::InfiniteResistanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }

    if (out.format == "plain") {
        std::cout << plain_value(v, out) << "\n";
    } else if (out.format == "csv") {
        std::cout << (out.precision ? "a,b,num,den,approx" : "a,b,num,den") << "\n";
        std::cout << a << "," << b << "," << csv_value_fields(v, out) << "\n";
    } else {
        json j;
        j["command"] = "effres";
        j["a"] = a;
        j["b"] = b;
        j["value"] = value_json(v, out);
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int render_checks(const std::vector<hyperohm::CheckResult>& checks, const OutputSpec& out) {
    size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;

    if (out.format == "plain") {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.bound << ")";
            if (!c.counterexample.empty()) std::cout << ": " << c.counterexample;
            std::cout << "\n";
        }
        std::cout << passed << "/" << checks.size() << " checks passed\n";
    } else if (out.format == "csv") {
        std::cout << "name,bound,status,counterexample\n";
        for (const auto& c : checks)
            std::cout << csv_quote(c.name) << "," << csv_quote(c.bound) << ","
                      << (c.pass ? "pass" : "fail") << "," << csv_quote(c.counterexample)
                      << "\n";
    } else {
        json arr = json::array();
        for (const auto& c : checks) {
            json j;
            j["name"] = c.name;
            j["bound"] = c.bound;
            j["status"] = c.pass ? "pass" : "fail";
            if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    }
    return passed == checks.size() ? kExitOk : kExitVerifyFailed;
}

struct VerifyOptions {
    std::string suite;
    std::optional<unsigned> max_n, max_l, order, max_k;
    std::optional<unsigned> point_k, point_n;  // single-point asymptotics query
};

int run_verify(const VerifyOptions& opt, const OutputSpec& out) {
    if (out.format == "bfile") usage_error("bfile output is only for integer sequences");

    hyperohm::VerifyBounds bounds;
    if (opt.max_n) {
        bounds.identities.max_n = *opt.max_n;
        bounds.oracle.max_n = *opt.max_n;
    }
    if (opt.max_l) bounds.identities.max_l = *opt.max_l;
    if (opt.order) {
        bounds.identities.order = *opt.order;
        bounds.series.order = *opt.order;
    }
    if (opt.max_k) bounds.asymptotics.max_k = *opt.max_k;
    bounds.oracle.allow_large = env_max_n().value_or(0) >= bounds.oracle.max_n;

    std::vector<hyperohm::CheckResult> checks;
    if (opt.suite == "identities") {
        checks = hyperohm::verify_identities(bounds.identities);
    } else if (opt.suite == "oracle") {
        checks = hyperohm::verify_oracle(bounds.oracle);
    } else if (opt.suite == "asymptotics") {
        if (opt.point_k && opt.point_n) {
            for (auto target : {hyperohm::ExpansionTarget::R, hyperohm::ExpansionTarget::S,
                                hyperohm::ExpansionTarget::debruijn})
                checks.push_back(hyperohm::asymptotics_point(target, *opt.point_k, *opt.point_n));
        } else if (opt.point_k || opt.point_n) {
            usage_error("--k and --n must be given together for a single-point measurement");
        } else {
            checks = hyperohm::verify_asymptotics(bounds.asymptotics);
        }
    } else if (opt.suite == "series") {
        checks = hyperohm::verify_series(bounds.series);
    } else if (opt.suite == "all") {
        checks = hyperohm::verify_all(bounds);
    } else {
        usage_error("unknown suite '" + opt.suite +
                    "' (expected identities|oracle|asymptotics|series|all)");
    }
    return render_checks(checks, out);
}

void add_output_options(CLI::App* cmd, OutputSpec& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}))
        ->capture_default_str();
    cmd->add_option("--precision", out.precision,
                    "Significant digits for an additional decimal rendering (exact p/q is "
                    "always printed)")
        ->check(CLI::Range(1u, 1000u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hypercube-of-resistors calculator and verification suites"};
    app.require_subcommand(1);

    // resistance
    unsigned res_n = 1;
    std::optional<unsigned> res_k;
    bool res_table = false;
    OutputSpec res_out;
    CLI::App* resistance =
        app.add_subcommand("resistance", "R_n (long diagonal) or R_{n,k} at Hamming distance k");
    resistance->add_option("n", res_n, "Hypercube dimension (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* k_opt = resistance->add_option("--k", res_k, "Hamming distance (0..n)");
    resistance->add_flag("--table", res_table, "Print the whole row k = 0..n")->excludes(k_opt);
    add_output_options(resistance, res_out);

    // seq
    std::string seq_name;
    unsigned seq_count = 1;
    OutputSpec seq_out;
    CLI::App* seq = app.add_subcommand(
        "seq", "Integer sequence families (Stirling triangles flattened by rows) and the "
               "rational tables Rn, Sn");
    seq->add_option("name", seq_name, "bell|fubini|barred|stirling1|stirling2|Rn|Sn")
        ->required()
        ->check(CLI::IsMember({"bell", "fubini", "barred", "stirling1", "stirling2", "Rn", "Sn"}));
    seq->add_option("count", seq_count, "How many values")->required()->check(CLI::PositiveNumber);
    add_output_options(seq, seq_out);

    // effres
    std::string graph_path;
    unsigned ea = 0, eb = 0;
    OutputSpec eff_out;
    CLI::App* effres =
        app.add_subcommand("effres", "Effective resistance between two vertices of a graph "
                                     "given as an edge-list file");
    effres->add_option("--graph", graph_path, "Edge list: 'p N' then 'e u v p/q' lines")
        ->required();
    effres->add_option("a", ea, "First vertex")->required();
    effres->add_option("b", eb, "Second vertex")->required();
    add_output_options(effres, eff_out);

    // verify
    VerifyOptions vopt;
    OutputSpec ver_out;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vopt.suite, "identities|oracle|asymptotics|series|all")
        ->required();
    verify->add_option("--max-n", vopt.max_n, "Index bound for R_n/S_n checks / oracle dimension");
    verify->add_option("--max-l", vopt.max_l, "Index bound for sequence identities");
    verify->add_option("--order", vopt.order, "Series truncation order");
    verify->add_option("--max-k", vopt.max_k, "Largest truncation order for envelopes");
    verify->add_option("--k", vopt.point_k, "Single-point envelope: truncation order");
    verify->add_option("--n", vopt.point_n, "Single-point envelope: sample n");
    add_output_options(verify, ver_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (resistance->parsed()) return run_resistance(res_n, res_k, res_table, res_out);
        if (seq->parsed()) return run_seq(seq_name, seq_count, seq_out);
        if (effres->parsed()) return run_effres(graph_path, ea, eb, eff_out);
        if (verify->parsed()) return run_verify(vopt, ver_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
