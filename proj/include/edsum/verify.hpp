#pragma once

// Invariant suites run by `edsum verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edsum/dedekind.hpp"

namespace edsum {

struct CheckResult {
    std::string suite;
    std::string name;
    double residual;
    double bound;
    bool pass;
};

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    int samples = 50;
    int lemma_triples = 20;
    std::uint64_t lemma_budget = 300;
    std::uint64_t coset_norm_bound = 200;
};

std::vector<CheckResult> verify_phi(const SumContext& ctx, const VerifyOptions& opts);
std::vector<CheckResult> verify_lemma(const SumContext& ctx, const VerifyOptions& opts);
std::vector<CheckResult> verify_e1(const SumContext& ctx, const VerifyOptions& opts);
std::vector<CheckResult> verify_cosets(const SumContext& ctx, const VerifyOptions& opts);

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "phi", "lemma", "e1", "cosets" or "all". Throws errc::precondition
/// for an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const SumContext& ctx, const VerifyOptions& opts);

}  // namespace edsum
