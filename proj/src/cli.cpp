#include "mfib/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mfib/classify.hpp"
#include "mfib/fib.hpp"
#include "mfib/markoff.hpp"

namespace mfib::cli {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool dot_ok, bool csv_ok) {
    std::vector<std::string> formats{"json", "text"};
    if (csv_ok) formats.push_back("csv");
    if (dot_ok) formats.push_back("dot");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
    cmd->add_option("--threads", o.threads, "worker cap; never changes the output")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int emit(const std::string& text, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file '" << o.out_path << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string wrap_json(const std::string& command, const std::string& results_doc) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["results"] = ordered_json::parse(results_doc);
    return j.dump();
}

bool parse_triple_arg(const std::string& s, bool fib_indices, Triple* out, std::string* err) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) {
        *err = "expected three comma-separated values, got '" + s + "'";
        return false;
    }
    try {
        if (fib_indices) {
            int idx[3];
            for (int i = 0; i < 3; ++i) {
                std::size_t pos = 0;
                idx[i] = std::stoi(parts[i], &pos);
                if (pos != parts[i].size() || idx[i] < 1) throw std::invalid_argument(parts[i]);
            }
            *out = Triple::of(fib(idx[0]), fib(idx[1]), fib(idx[2]));
        } else {
            *out = Triple::of(BigNat::from_decimal(parts[0]), BigNat::from_decimal(parts[1]),
                              BigNat::from_decimal(parts[2]));
        }
    } catch (const std::exception& e) {
        *err = std::string("invalid triple '") + s + "': " + e.what();
        return false;
    }
    return true;
}

int run_tree(const std::string& root_arg, bool fib_indices, int depth, const CommonOpts& o,
             std::ostream& out, std::ostream& err) {
    Triple root = Triple::of(BigNat{1}, BigNat{1}, BigNat{3});
    std::string msg;
    if (!parse_triple_arg(root_arg, fib_indices, &root, &msg)) {
        err << "error: " << msg << '\n';
        return 2;
    }
    MarkoffTree tree;
    try {
        tree = generate_tree(root, depth);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    std::string text;
    if (o.format == "dot") text = tree.to_dot();
    else if (o.format == "json")
        text = wrap_json("tree", tree.to_json_nested());
    else
        text = "markoff tree, m=" + tree.m().to_decimal() + ", depth " +
               std::to_string(tree.depth()) + ", " + std::to_string(tree.nodes().size()) +
               " nodes (* = all components Fibonacci)\n" + tree.to_text();
    return emit(text, o, out, err);
}

int run_bounds(int nmin, int nmax, int amin, int amax, int sigfigs, const std::string& direction,
               const CommonOpts& o, std::ostream& out, std::ostream& err) {
    BoundTable t;
    try {
        t = bound_table(nmin, nmax, amin, amax, sigfigs,
                        direction == "down" ? Rounding::down : Rounding::up);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    std::string text;
    if (o.format == "csv") text = t.to_csv();
    else if (o.format == "json")
        text = wrap_json("bounds", t.to_json());
    else
        text = t.to_text();
    return emit(text, o, out, err);
}

int run_enumerate(int cmax, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    EnumerationReport rep;
    try {
        rep = enumerate_fib_triples(cmax, o.threads);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    std::string text;
    if (o.format == "csv") text = rep.to_csv();
    else if (o.format == "json")
        text = rep.to_json("enumerate");
    else
        text = rep.to_text();
    return emit(text, o, out, err);
}

int run_solve(const std::string& m_arg, int cmax, const CommonOpts& o, std::ostream& out,
              std::ostream& err) {
    BigInt m;
    std::vector<FibTriple> sols;
    try {
        m = BigInt::from_decimal(m_arg);
        sols = solve_for_m(m, cmax);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    std::string text;
    if (o.format == "json") {
        ordered_json results;
        results["m"] = m.to_decimal();
        results["c_max"] = cmax;
        auto arr = ordered_json::array();
        for (const auto& t : sols) {
            ordered_json tj;
            tj["indices"] = {t.a, t.b, t.c};
            tj["values"] = {fib(t.a).to_decimal(), fib(t.b).to_decimal(), fib(t.c).to_decimal()};
            arr.push_back(std::move(tj));
        }
        results["solutions"] = std::move(arr);
        text = wrap_json("solve", results.dump());
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "a,b,c,Fa,Fb,Fc\n";
        for (const auto& t : sols)
            os << t.a << ',' << t.b << ',' << t.c << ',' << fib(t.a).to_decimal() << ','
               << fib(t.b).to_decimal() << ',' << fib(t.c).to_decimal() << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        os << sols.size() << " Fibonacci solution(s) for m=" << m.to_decimal()
           << " with c <= " << cmax << '\n';
        for (const auto& t : sols) {
            os << "  indices (" << t.a << "," << t.b << "," << t.c << ")  values "
               << t.values().to_string() << '\n';
        }
        text = os.str();
    }
    return emit(text, o, out, err);
}

int run_audit(int cmax, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    AuditReport rep;
    try {
        rep = audit_proof_bounds(cmax);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    std::string text;
    if (o.format == "csv") text = rep.to_csv();
    else if (o.format == "json")
        text = rep.to_json("audit");
    else
        text = rep.to_text();
    int rc = emit(text, o, out, err);
    if (rc != 0) return rc;
    return rep.all_pass() ? 0 : 1;
}

int run_verify(int cmax, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (cmax < 20) {
        err << "error: verify requires --cmax >= 20\n";
        return 2;
    }
    EnumerationReport enum_rep = enumerate_fib_triples(cmax, o.threads);
    const bool enum_ok = enum_rep.matches_classification();

    // Karamata sandwiches on the standard parameter sets, audit at its default range.
    const std::vector<KaramataParams> params{{2, 1, 7}, {2, 2, 7}, {3, 1, 9}, {4, 1, 9}};
    constexpr int kSandwichCmax = 40;
    std::vector<AuditReport> sandwiches;
    bool sandwich_ok = true;
    for (const auto& p : params) {
        sandwiches.push_back(karamata_sandwich_check(p, kSandwichCmax));
        sandwich_ok = sandwich_ok && sandwiches.back().all_pass();
    }
    AuditReport audit_rep = audit_proof_bounds(200);
    const bool audit_ok = audit_rep.all_pass();
    const bool ok = enum_ok && sandwich_ok && audit_ok;

    std::string text;
    if (o.format == "json") {
        ordered_json results;
        results["c_max"] = cmax;
        results["pass"] = ok;
        results["enumeration"] =
            ordered_json::parse(enum_rep.to_json("enumerate"))["results"];
        auto sw = ordered_json::array();
        for (const auto& s : sandwiches)
            sw.push_back(ordered_json::parse(s.to_json("karamata"))["results"]);
        results["karamata_sandwich"] = std::move(sw);
        results["audit"] = ordered_json::parse(audit_rep.to_json("audit"))["results"];
        text = wrap_json("verify", results.dump());
    } else {
        std::ostringstream os;
        os << "== enumeration (c <= " << cmax << ") ==\n" << enum_rep.to_text();
        os << "== karamata sandwich (c <= " << kSandwichCmax << ") ==\n";
        for (std::size_t i = 0; i < sandwiches.size(); ++i) {
            const auto& p = params[i];
            os << (sandwiches[i].all_pass() ? "PASS" : "FAIL") << " (A=" << p.A << ",t=" << p.t
               << ",C=" << p.C << ")\n";
        }
        os << "== proof-constant audit (c <= 200) ==\n" << audit_rep.to_text();
        os << (ok ? "VERIFY OK" : "VERIFY FAILED") << '\n';
        text = os.str();
    }
    int rc = emit(text, o, out, err);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Markoff-Fibonacci m-triple toolkit"};
    app.require_subcommand(1);

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "Vieta tree from a minimal root");
    std::string root_arg;
    int tree_depth = 4;
    bool fib_indices = false;
    CommonOpts tree_opts;
    tree_cmd->add_option("--root", root_arg, "root triple as comma-separated values")
        ->required();
    tree_cmd->add_option("--depth", tree_depth, "tree depth (node values grow doubly fast)")
        ->check(CLI::Range(0, 24))
        ->capture_default_str();
    tree_cmd->add_flag("--fib-indices", fib_indices,
                       "interpret --root as Fibonacci indices instead of values");
    add_common(tree_cmd, tree_opts, /*dot_ok=*/true, /*csv_ok=*/false);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "all positive-m Fibonacci triples");
    int enum_cmax = 500;
    CommonOpts enum_opts;
    enum_cmd->add_option("--cmax", enum_cmax, "largest Fibonacci index c")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    add_common(enum_cmd, enum_opts, false, true);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Fibonacci solutions for one m");
    std::string m_arg;
    int solve_cmax = 500;
    CommonOpts solve_opts;
    solve_cmd->add_option("--m", m_arg, "target m value (decimal)")->required();
    solve_cmd->add_option("--cmax", solve_cmax, "largest Fibonacci index c")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    add_common(solve_cmd, solve_opts, false, true);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Fibonacci quotient bound tables");
    int nmin = 2, nmax = 10, amin = 1, amax = 9, sigfigs = 4;
    std::string direction = "down";
    CommonOpts bounds_opts;
    bounds_cmd->add_option("--nmin", nmin)->check(CLI::PositiveNumber)->capture_default_str();
    bounds_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber)->capture_default_str();
    bounds_cmd->add_option("--amin", amin)->check(CLI::PositiveNumber)->capture_default_str();
    bounds_cmd->add_option("--amax", amax)->check(CLI::PositiveNumber)->capture_default_str();
    bounds_cmd->add_option("--sigfigs", sigfigs, "significant figures")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds_cmd->add_option("--direction", direction, "rounding direction")
        ->check(CLI::IsMember(std::vector<std::string>{"down", "up"}))
        ->capture_default_str();
    add_common(bounds_cmd, bounds_opts, false, true);

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "exact audit of the proof constants");
    int audit_cmax = 200;
    CommonOpts audit_opts;
    audit_cmd->add_option("--cmax", audit_cmax, "largest c audited")
        ->check(CLI::Range(20, 100000))
        ->capture_default_str();
    add_common(audit_cmd, audit_opts, false, true);

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "enumeration + sandwich + audit; exit 0 iff everything matches");
    int verify_cmax = 500;
    CommonOpts verify_opts;
    verify_cmd->add_option("--cmax", verify_cmax, "largest Fibonacci index c enumerated")
        ->capture_default_str();
    add_common(verify_cmd, verify_opts, false, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (tree_cmd->parsed())
            return run_tree(root_arg, fib_indices, tree_depth, tree_opts, out, err);
        if (enum_cmd->parsed()) return run_enumerate(enum_cmax, enum_opts, out, err);
        if (solve_cmd->parsed()) return run_solve(m_arg, solve_cmax, solve_opts, out, err);
        if (bounds_cmd->parsed())
            return run_bounds(nmin, nmax, amin, amax, sigfigs, direction, bounds_opts, out, err);
        if (audit_cmd->parsed()) return run_audit(audit_cmax, audit_opts, out, err);
        if (verify_cmd->parsed()) return run_verify(verify_cmax, verify_opts, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mfib::cli
