#pragma once

#include <cstdint>

#include <json.hpp>

#include "symq/involution.hpp"
#include "symq/symplectic.hpp"

namespace symq {

enum class Verdict { confirms_paper, contradicts_paper, not_applicable };

std::string verdict_name(Verdict v);

struct UnknownCheck : std::invalid_argument {
    explicit UnknownCheck(const std::string& name)
        : std::invalid_argument("unknown check \"" + name + "\"") {}
};

struct VerifyOptions {
    int threads = 1;
    long long samples = 10000;
    long long coeff_bound = 50;
    std::uint64_t seed = 0;
};

/**
 * Outcome of one named check. The payload carries per-instance hypotheses,
 * witnesses and counts so the verdict is recomputable from it. elapsed_ms is
 * reported in the text rendering only; JSON output is byte-stable across runs
 * and thread counts.
 */
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::not_applicable;
    nlohmann::json instances;  // array, one object per instance
    double elapsed_ms = 0.0;
};

/// F2, F3, F4, F5, F9, Z/9Z, Z/15Z.
std::vector<RingDescriptor> default_ring_descriptors();

// Over integral domains with a nontrivial form: a linear good involution
// exists iff the quandle is a kei iff char(R) = 2.
CheckReport verify_theorem1(const VerifyOptions& opts);

// Char-2 domain, nondegenerate form, nontrivial quandle: the only good
// involution is the identity.
CheckReport verify_theorem2(const VerifyOptions& opts);

// Char != 2 with a hyperbolic pair: no good involution at all.
CheckReport verify_theorem3(const VerifyOptions& opts);

// (Z/9Z)^2 with gram [[0,3],[6,0]]: no hyperbolic pair, form values {0,3,6},
// and still no good involution.
CheckReport verify_example_z9(const VerifyOptions& opts);

// Sampled suite for the rho = sigma(bar x) x involution on (Z[i])^2 plus the
// exhaustive residue-level checks.
CheckReport verify_gaussian(const VerifyOptions& opts);

// F2^3 with a rank-2 form: counts good involutions (expected > 1) and tests
// whether every involution fixing the complement of the radical pointwise is
// good; the agreement flag is reported, not asserted.
CheckReport verify_degenerate_remark(const VerifyOptions& opts);

const std::vector<std::string>& check_names();
CheckReport run_check(const std::string& name, const VerifyOptions& opts);
std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opts);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);
bool any_contradiction(const std::vector<CheckReport>& reports);

}  // namespace symq
