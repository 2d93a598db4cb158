#include "bipdom/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "bipdom/error.hpp"

namespace bipdom {

CnfInstance::CnfInstance(int num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 0) throw Error(ErrorCode::VariableOutOfRange, "negative variable count");
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
        auto& c = clauses_[j];
        for (const auto& lit : c) {
            if (lit.var < 1 || lit.var > num_vars_)
                throw Error(ErrorCode::VariableOutOfRange, "clause " + std::to_string(j + 1) + ": variable " +
                                                               std::to_string(lit.var) + " outside 1.." +
                                                               std::to_string(num_vars_));
        }
        // Clauses are sets; keep them sorted so equality and serialization are canonical.
        std::sort(c.begin(), c.end());
        for (std::size_t a = 0; a + 1 < c.size(); ++a) {
            if (c[a].var != c[a + 1].var) continue;
            if (c[a].positive != c[a + 1].positive)
                throw Error(ErrorCode::TautologicalClause,
                            "clause " + std::to_string(j + 1) + " contains u" + std::to_string(c[a].var) + " and its negation");
            throw Error(ErrorCode::ClauseArityError,
                        "clause " + std::to_string(j + 1) + " repeats variable " + std::to_string(c[a].var));
        }
    }
}

CnfInstance parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<std::vector<int>> raw;
    std::vector<int> current;

    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt;
            if (have_header) fail("duplicate header");
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) fail("expected 'p cnf <n> <m>'");
            if (ls >> tok) fail("trailing tokens after header");
            have_header = true;
            continue;
        }
        if (!have_header) fail("clause before 'p cnf' header");
        do {
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("bad literal '" + tok + "'");
            if (value == 0) {
                raw.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(value);
            }
        } while (ls >> tok);
    }
    if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'p cnf' header");
    if (!current.empty()) throw Error(ErrorCode::SyntaxError, "last clause is not terminated by 0");
    if (static_cast<long long>(raw.size()) != m)
        throw Error(ErrorCode::SyntaxError,
                    "header declares " + std::to_string(m) + " clauses, found " + std::to_string(raw.size()));

    std::vector<Clause> clauses;
    clauses.reserve(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (raw[j].size() != 3)
            throw Error(ErrorCode::ClauseArityError, "clause " + std::to_string(j + 1) + " has " +
                                                         std::to_string(raw[j].size()) + " literals, expected 3");
        clauses.push_back({Literal::from_dimacs(raw[j][0]), Literal::from_dimacs(raw[j][1]),
                           Literal::from_dimacs(raw[j][2])});
    }
    return CnfInstance(static_cast<int>(n), std::move(clauses));
}

std::string to_dimacs(const CnfInstance& inst) {
    std::string out = "p cnf " + std::to_string(inst.num_vars()) + " " + std::to_string(inst.num_clauses()) + "\n";
    for (const auto& c : inst.clauses()) {
        for (const auto& lit : c) out += std::to_string(lit.to_dimacs()) + " ";
        out += "0\n";
    }
    return out;
}

bool evaluate(const CnfInstance& inst, const Assignment& t) {
    if (t.size() != inst.num_vars())
        throw Error(ErrorCode::PartialAssignment, "assignment covers " + std::to_string(t.size()) + " of " +
                                                      std::to_string(inst.num_vars()) + " variables");
    return std::all_of(inst.clauses().begin(), inst.clauses().end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal lit) { return t.is_true(lit); });
    });
}

namespace {

// 0 = unassigned, +1 = true, -1 = false; index 0 unused.
using Partial = std::vector<int>;

int literal_value(const Partial& a, Literal lit) {
    int v = a[static_cast<std::size_t>(lit.var)];
    return lit.positive ? v : -v;
}

bool dpll(const std::vector<Clause>& clauses, Partial& a) {
    for (;;) {
        bool changed = false;
        bool all_satisfied = true;
        // Polarity seen among literals of not-yet-satisfied clauses: bit 1 positive, bit 2 negative.
        std::vector<int> polarity(a.size(), 0);

        for (const auto& c : clauses) {
            int unassigned = 0;
            Literal last{};
            bool satisfied = false;
            for (const auto& lit : c) {
                int v = literal_value(a, lit);
                if (v > 0) {
                    satisfied = true;
                    break;
                }
                if (v == 0) {
                    ++unassigned;
                    last = lit;
                }
            }
            if (satisfied) continue;
            all_satisfied = false;
            if (unassigned == 0) return false;
            if (unassigned == 1) {
                a[static_cast<std::size_t>(last.var)] = last.positive ? 1 : -1;
                changed = true;
                continue;
            }
            for (const auto& lit : c)
                if (literal_value(a, lit) == 0) polarity[static_cast<std::size_t>(lit.var)] |= lit.positive ? 1 : 2;
        }
        if (all_satisfied) return true;
        if (changed) continue;

        for (std::size_t v = 1; v < a.size(); ++v) {
            if (a[v] == 0 && (polarity[v] == 1 || polarity[v] == 2)) {
                a[v] = polarity[v] == 1 ? 1 : -1;
                changed = true;
            }
        }
        if (!changed) break;
    }

    std::size_t branch = 0;
    for (const auto& c : clauses) {
        for (const auto& lit : c) {
            if (a[static_cast<std::size_t>(lit.var)] == 0 && (branch == 0 || static_cast<std::size_t>(lit.var) < branch))
                branch = static_cast<std::size_t>(lit.var);
        }
    }
    // Every unsatisfied clause still has two unassigned literals here, so branch != 0.
    for (int value : {1, -1}) {
        Partial trial = a;
        trial[branch] = value;
        if (dpll(clauses, trial)) {
            a = std::move(trial);
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Assignment> solve_sat(const CnfInstance& inst) {
    Partial a(static_cast<std::size_t>(inst.num_vars()) + 1, 0);
    if (!dpll(inst.clauses(), a)) return std::nullopt;
    Assignment t = Assignment::all_false(inst.num_vars());
    for (int v = 1; v <= inst.num_vars(); ++v) t.set(v, a[static_cast<std::size_t>(v)] > 0);
    return t;
}

CnfInstance random_instance(int n, int m, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::TooFewVariables, "random 3SAT needs at least 3 variables, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_var(1, n);
    std::bernoulli_distribution pick_sign(0.5);
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int j = 0; j < m; ++j) {
        Clause c;
        for (std::size_t k = 0; k < 3; ++k) {
            int var = 0;
            do {
                var = pick_var(rng);
            } while (std::any_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k),
                                 [&](Literal l) { return l.var == var; }));
            c[k] = Literal{var, pick_sign(rng)};
        }
        clauses.push_back(c);
    }
    return CnfInstance(n, std::move(clauses));
}

} // namespace bipdom
