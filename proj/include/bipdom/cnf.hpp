#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bipdom {

/// A signed variable occurrence; `var` is 1-based.
struct Literal {
    int var = 0;
    bool positive = true;

    static Literal from_dimacs(int value) { return {value < 0 ? -value : value, value > 0}; }
    int to_dimacs() const { return positive ? var : -var; }

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

/// 3SAT instance. Every clause has three literals over three distinct
/// variables in 1..num_vars; instances are validated on construction.
class CnfInstance {
public:
    CnfInstance() = default;
    /// Throws ClauseArityError, TautologicalClause, VariableOutOfRange.
    CnfInstance(int num_vars, std::vector<Clause> clauses);

    int num_vars() const noexcept { return num_vars_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

private:
    int num_vars_ = 0;
    std::vector<Clause> clauses_;
};

/// Truth values for variables 1..n, stored 0-based.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
    static Assignment all_false(int n) { return Assignment(std::vector<bool>(static_cast<std::size_t>(n), false)); }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool value(int var) const { return values_.at(static_cast<std::size_t>(var - 1)); }
    void set(int var, bool v) { values_.at(static_cast<std::size_t>(var - 1)) = v; }
    bool is_true(Literal lit) const { return value(lit.var) == lit.positive; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<bool> values_;
};

/// Parses DIMACS CNF (`c` comments, `p cnf <n> <m>`, 0-terminated clauses).
/// Throws SyntaxError plus the CnfInstance validation errors.
CnfInstance parse_dimacs(std::string_view text);

/// Canonical DIMACS: header, one clause per line, literals ascending by variable.
std::string to_dimacs(const CnfInstance& inst);

/// Throws PartialAssignment if `t` does not cover every variable.
bool evaluate(const CnfInstance& inst, const Assignment& t);

/// DPLL with unit propagation and pure-literal elimination. Variables the
/// search never needs are set to false.
std::optional<Assignment> solve_sat(const CnfInstance& inst);

/// Uniform random 3SAT: each clause picks 3 distinct variables and uniform
/// signs. Deterministic in `seed`. Throws TooFewVariables when n < 3.
CnfInstance random_instance(int n, int m, std::uint64_t seed);

} // namespace bipdom
