#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bipdom/cnf.hpp"
#include "bipdom/error.hpp"
#include "bipdom/graph.hpp"

namespace fixtures {

inline bipdom::Graph path(int n) {
    std::vector<bipdom::Label> v;
    std::vector<std::pair<bipdom::Label, bipdom::Label>> e;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
    return bipdom::Graph::from_edge_list(v, e);
}

/// Cycle on vertices "1".."n".
inline bipdom::Graph cycle(int n) {
    std::vector<bipdom::Label> v;
    std::vector<std::pair<bipdom::Label, bipdom::Label>> e;
    for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i) e.emplace_back(std::to_string(i), std::to_string(i % n + 1));
    return bipdom::Graph::from_edge_list(v, e);
}

inline bipdom::Graph star3() {
    return bipdom::Graph::from_edge_list({"hub", "a", "b", "c"}, {{"hub", "a"}, {"hub", "b"}, {"hub", "c"}});
}

inline bipdom::Graph edgeless(int n) {
    std::vector<bipdom::Label> v;
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return bipdom::Graph::from_edge_list(v, {});
}

/// C1={u1,u2,~u3}, C2={~u1,u2,u4}, C3={~u2,u3,u4}; used for the first three reductions.
inline const char* kSampleDimacs = "p cnf 4 3\n1 2 -3 0\n-1 2 4 0\n-2 3 4 0\n";

/// C1={u1,u2,~u3}, C2={u1,~u2,u4}, C3={~u2,~u3,u4}; used for total reinforcement.
inline const char* kSampleBDimacs = "p cnf 4 3\n1 2 -3 0\n1 -2 4 0\n-2 -3 4 0\n";

inline bipdom::CnfInstance sample() { return bipdom::parse_dimacs(kSampleDimacs); }
inline bipdom::CnfInstance sample_b() { return bipdom::parse_dimacs(kSampleBDimacs); }

/// All eight sign patterns over {u1,u2,u3}: unsatisfiable.
inline bipdom::CnfInstance all_sign_patterns() {
    std::vector<bipdom::Clause> clauses;
    for (int mask = 0; mask < 8; ++mask)
        clauses.push_back({bipdom::Literal{1, (mask & 1) != 0}, bipdom::Literal{2, (mask & 2) != 0},
                           bipdom::Literal{3, (mask & 4) != 0}});
    return bipdom::CnfInstance(3, clauses);
}

/// Code of the bipdom::Error thrown by `f`; records a failure if nothing is thrown.
inline bipdom::ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const bipdom::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected bipdom::Error";
    return bipdom::ErrorCode::SyntaxError;
}

inline bipdom::Assignment assignment(std::vector<bool> values) { return bipdom::Assignment(std::move(values)); }

} // namespace fixtures
