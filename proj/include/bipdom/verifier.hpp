#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bipdom/cnf.hpp"
#include "bipdom/domset.hpp"
#include "bipdom/perturb.hpp"
#include "bipdom/reduction.hpp"

namespace bipdom {

struct ClaimCheck {
    std::string id;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerificationReport {
    ReductionKind kind = ReductionKind::Bondage;
    int n = 0;
    int m = 0;
    std::optional<std::uint64_t> seed;
    std::string instance_dimacs;
    bool sat = false;
    /// gamma for the standard kinds, gamma_t for the total kinds.
    std::size_t gamma = 0;
    VertexSet gamma_witness;
    PerturbResult perturbation;
    std::vector<ClaimCheck> claims;
    bool deep_checked = false;
    double elapsed_ms = 0.0;

    bool pass() const;
    std::vector<const ClaimCheck*> failures() const;
};

struct VerifyOptions {
    bool deep = false;
    /// Cap for the perturbation search; 2 separates "1" from "at least 2".
    std::size_t max_k = 2;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
};

VerificationReport verify_bondage(const CnfInstance& inst, const VerifyOptions& opts = {});
VerificationReport verify_total_bondage(const CnfInstance& inst, const VerifyOptions& opts = {});
VerificationReport verify_reinforcement(const CnfInstance& inst, const VerifyOptions& opts = {});
VerificationReport verify_total_reinforcement(const CnfInstance& inst, const VerifyOptions& opts = {});
VerificationReport verify(ReductionKind kind, const CnfInstance& inst, const VerifyOptions& opts = {});

/// Instance seed used by trial `trial` of a fuzz run seeded with `seed`.
std::uint64_t fuzz_trial_seed(std::uint64_t seed, std::size_t trial);

/// Verifies `trials` random instances. Reports are ordered by trial index;
/// `jobs` > 1 runs trials on worker threads. Throws TooFewVariables.
std::vector<VerificationReport> fuzz(ReductionKind kind, int n, int m, std::size_t trials, std::uint64_t seed,
                                     const VerifyOptions& opts = {}, unsigned jobs = 1);

std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r, int indent = 2);
std::string reports_to_json(std::span<const VerificationReport> reports, int indent = 2);

} // namespace bipdom
