#include "bipdom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bipdom/cnf.hpp"
#include "bipdom/domset.hpp"
#include "bipdom/error.hpp"
#include "bipdom/graph_io.hpp"
#include "bipdom/perturb.hpp"
#include "bipdom/reduction.hpp"
#include "bipdom/verifier.hpp"

namespace bipdom::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    buf << f.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << text;
}

std::string join_labels(const VertexSet& set) {
    std::string s;
    for (const auto& l : set) s += " " + l;
    return s;
}

std::string perturbation_text(const std::string& name, const PerturbResult& r) {
    std::string s = name + " " + describe(r) + "\nbase " + std::to_string(r.base) + "\n";
    for (const auto& e : r.witness) s += "edge " + e.first + " " + e.second + "\n";
    return s;
}

const std::vector<std::string> kKindNames = {"bondage", "total-bondage", "reinforcement", "total-reinforcement"};

struct Options {
    std::string input = "-";
    std::string output;
    std::string roles;
    std::string kind;
    int max_k = -1;
    bool deep = false;
    bool no_deep = false;
    bool json = false;
    bool text = false;
    int n = 3;
    int m = 4;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

std::optional<std::size_t> max_k_of(const Options& o) {
    if (o.max_k < 0) return std::nullopt;
    return static_cast<std::size_t>(o.max_k);
}

VerifyOptions verify_options(const Options& o, int n) {
    VerifyOptions v;
    // Minimum-set enumeration is on by default only for small instances.
    v.deep = o.deep || (!o.no_deep && n <= 4);
    if (o.max_k >= 0) v.max_k = static_cast<std::size_t>(o.max_k);
    return v;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Domination, bondage and reinforcement numbers; 3SAT gadget reductions and their verification",
                 "bipdom"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Output path (default stdout)"); };
    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", o.json, "JSON output");
        auto* t = sub->add_flag("--text", o.text, "Line-oriented output (default)");
        j->excludes(t);
    };
    auto add_kind = [&](CLI::App* sub, bool allow_all) {
        auto names = kKindNames;
        if (allow_all) names.push_back("all");
        sub->add_option("--kind", o.kind, "Reduction kind")->required()->check(CLI::IsMember(names));
    };

    auto* gamma = app.add_subcommand("gamma", "Domination number with a witness");
    auto* gamma_t = app.add_subcommand("gamma-t", "Total domination number with a witness");
    auto* bondage = app.add_subcommand("bondage", "Bondage number");
    auto* total_bondage = app.add_subcommand("total-bondage", "Total bondage number");
    auto* reinforcement = app.add_subcommand("reinforcement", "Reinforcement number");
    auto* total_reinforcement = app.add_subcommand("total-reinforcement", "Total reinforcement number");
    auto* sat = app.add_subcommand("sat", "Decide a 3SAT instance (DIMACS)");
    auto* reduce = app.add_subcommand("reduce", "Build the gadget graph of a 3SAT instance");
    auto* verify_cmd = app.add_subcommand("verify", "Check every reduction claim on one instance");
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check the claims on seeded random instances");
    auto* export_dot = app.add_subcommand("export-dot", "Convert a graph file to DOT");

    for (auto* sub : {gamma, gamma_t, bondage, total_bondage, reinforcement, total_reinforcement, sat, reduce,
                      verify_cmd, export_dot}) {
        sub->add_option("input", o.input, "Input file, '-' for stdin")->required();
        add_output(sub);
    }
    for (auto* sub : {bondage, total_bondage, reinforcement, total_reinforcement})
        sub->add_option("--max-k", o.max_k, "Largest edge-set size to search")->check(CLI::NonNegativeNumber);

    add_kind(reduce, false);
    reduce->add_option("--roles", o.roles, "Role map path (default <output>.roles when -o is given)");

    add_kind(verify_cmd, false);
    add_format(verify_cmd);
    verify_cmd->add_option("--max-k", o.max_k, "Perturbation search cap")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--deep", o.deep, "Enumerate minimum sets and check their shape");
    verify_cmd->add_flag("--no-deep", o.no_deep, "Skip minimum-set enumeration")->excludes("--deep");

    add_kind(fuzz_cmd, true);
    add_format(fuzz_cmd);
    add_output(fuzz_cmd);
    fuzz_cmd->add_option("-n", o.n, "Variables per instance")->check(CLI::Range(3, 64));
    fuzz_cmd->add_option("-m", o.m, "Clauses per instance")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--trials", o.trials, "Number of instances");
    fuzz_cmd->add_option("--seed", o.seed, "Base seed");
    fuzz_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--max-k", o.max_k, "Perturbation search cap")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_flag("--deep", o.deep, "Enumerate minimum sets and check their shape");
    fuzz_cmd->add_flag("--no-deep", o.no_deep, "Skip minimum-set enumeration")->excludes("--deep");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*gamma || *gamma_t) {
            const Graph g = parse_graph_text(read_input(o.input, in));
            const bool total = static_cast<bool>(*gamma_t);
            const auto r = total ? total_domination_number(g) : domination_number(g);
            write_output(o.output,
                         std::string(total ? "gamma_t " : "gamma ") + std::to_string(r.value) + "\nwitness" +
                             join_labels(r.witness) + "\n",
                         out);
            return kOk;
        }
        if (*bondage || *total_bondage || *reinforcement || *total_reinforcement) {
            const Graph g = parse_graph_text(read_input(o.input, in));
            PerturbResult r;
            std::string name;
            if (*bondage) {
                r = bondage_number(g, max_k_of(o));
                name = "bondage";
            } else if (*total_bondage) {
                r = total_bondage_number(g, max_k_of(o));
                name = "total-bondage";
            } else if (*reinforcement) {
                r = reinforcement_number(g, max_k_of(o));
                name = "reinforcement";
            } else {
                r = total_reinforcement_number(g, max_k_of(o));
                name = "total-reinforcement";
            }
            write_output(o.output, perturbation_text(name, r), out);
            return kOk;
        }
        if (*sat) {
            const auto inst = parse_dimacs(read_input(o.input, in));
            const auto model = solve_sat(inst);
            std::string s;
            if (!model) {
                s = "s UNSATISFIABLE\n";
            } else {
                s = "s SATISFIABLE\nv";
                for (int v = 1; v <= inst.num_vars(); ++v) s += " " + std::to_string(model->value(v) ? v : -v);
                s += " 0\n";
            }
            write_output(o.output, s, out);
            return kOk;
        }
        if (*reduce) {
            const auto inst = parse_dimacs(read_input(o.input, in));
            const auto r = build(*parse_kind(o.kind), inst);
            write_output(o.output, write_graph_text(r.graph), out);
            std::string roles_path = o.roles;
            if (roles_path.empty() && !o.output.empty() && o.output != "-") roles_path = o.output + ".roles";
            if (!roles_path.empty()) write_output(roles_path, write_roles(r), out);
            return kOk;
        }
        if (*verify_cmd) {
            const auto inst = parse_dimacs(read_input(o.input, in));
            const auto report = verify(*parse_kind(o.kind), inst, verify_options(o, inst.num_vars()));
            write_output(o.output, o.json ? report_to_json(report) + "\n" : report_to_text(report), out);
            return report.pass() ? kOk : kVerificationFailed;
        }
        if (*fuzz_cmd) {
            std::vector<ReductionKind> kinds;
            if (o.kind == "all") {
                for (const auto& name : kKindNames) kinds.push_back(*parse_kind(name));
            } else {
                kinds.push_back(*parse_kind(o.kind));
            }
            std::vector<VerificationReport> reports;
            for (auto kind : kinds) {
                auto part = fuzz(kind, o.n, o.m, o.trials, o.seed, verify_options(o, o.n), o.jobs);
                reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }
            const auto failed = static_cast<std::size_t>(
                std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass(); }));
            std::string text;
            if (o.json) {
                text = reports_to_json(reports) + "\n";
            } else {
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& r = reports[i];
                    text += std::string(kind_name(r.kind)) + " trial " + std::to_string(i % std::max<std::size_t>(o.trials, 1)) +
                            " seed " + std::to_string(*r.seed) + " sat " + (r.sat ? "true" : "false") + " gamma " +
                            std::to_string(r.gamma) + " perturbation " + describe(r.perturbation) + " " +
                            (r.pass() ? "PASS" : "FAIL") + "\n";
                    if (!r.pass()) text += report_to_text(r);
                }
                text += "summary " + std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
                        " passed\n";
            }
            write_output(o.output, text, out);
            return failed == 0 ? kOk : kVerificationFailed;
        }
        if (*export_dot) {
            write_output(o.output, to_dot(parse_graph_text(read_input(o.input, in))), out);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: io: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

} // namespace bipdom::cli
