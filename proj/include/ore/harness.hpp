#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore/oreseries.hpp"

namespace ore {

/// Mechanical verification of the structural identities on concrete rings.
/// Every check is exact scalar equality, never tolerance-based; failures
/// always carry a reproducible witness, and a report is deterministic given
/// its seed (timing is reported separately and excluded from the
/// deterministic surface).

struct LemmaReport {
    std::string lemma_id;
    std::string ring;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    bool passed = true;
    std::vector<std::string> witnesses;
    std::int64_t millis = 0;
};

// floor(d*n / (n - N)): the largest m NOT excluded by the degree-count bound;
// every larger m must give a vanishing x^{dn} coefficient of (a x^n)^m.
// BadBoundInputs unless n > N >= 0 and d >= 1.
std::size_t vanishing_bound(std::size_t d, std::size_t n, std::size_t nildeg_a);

// The ordered product a sigma^n(a) sigma^{2n}(a) ... sigma^{(d-1)n}(a); d >= 1.
AlgebraElement product_chain(const ContextPtr& ctx, const AlgebraElement& a, std::size_t n,
                             std::size_t d);

// Least d <= d_max with a vanishing product chain, if any.
std::optional<std::size_t> find_vanishing_d(const ContextPtr& ctx, const AlgebraElement& a,
                                            std::size_t n, std::size_t d_max);

struct NilCertificate {
    std::size_t n = 0;  // positive multiple of tordeg(a), n >= t, n > nildeg(a)
    std::size_t d = 0;  // chain length with vanishing product, hence a^d = 0
};

// Nil certificate for a: picks the least admissible n, finds the vanishing
// chain depth, replays a^d = 0, and also confirms the chain at the next two
// admissible n. nullopt when no chain of length <= d_max vanishes.
std::optional<NilCertificate> nil_witness(const ContextPtr& ctx, const AlgebraElement& a,
                                          std::size_t t, std::size_t d_max);

// Exact coefficients (c_lo..c_hi) with sum_i c_i lambda^i = value_j at each
// lambda_j. Needs pairwise distinct nonzero lambdas, at least hi-lo+1 of them.
std::vector<Scalar> vandermonde_solve(const std::vector<Scalar>& lambdas,
                                      const std::vector<Scalar>& values, long lo, long hi);

// Items (1)-(3) of the nildeg bounds, on `trials` random draws of
// (a, b, lambda, s <= 4, d <= 4) plus all basis pairs.
LemmaReport check_nildeg_bounds(const ContextPtr& ctx, std::size_t trials, std::uint64_t seed);

// For every m in (vanishing_bound, vanishing_bound + m_extra], computes
// ((a x^n)^m)_{dn} via iterated_expand AND via naive powers, and asserts both
// are zero; the two paths must also agree at every m examined below the bound.
LemmaReport check_coefficient_vanishing(const ContextPtr& ctx, const AlgebraElement& a,
                                        std::size_t n, std::size_t d, std::size_t m_extra);

struct SuiteOptions {
    std::size_t context_trials = 64;
    std::size_t nildeg_trials = 200;
    std::size_t qleibniz_max_n = 8;
    std::size_t goodearl_trials = 200;
    std::size_t goodearl_max_deg = 6;
    std::size_t quasi_trials = 50;
    std::size_t trunc = 24;
    std::size_t guard = 6;
    std::size_t m_extra = 5;
    std::string only;  // run a single lemma when nonempty
};

extern const std::vector<std::string> lemma_ids;  // fixed suite order

// Runs every lemma check on the given ring; deterministic given the seed.
std::vector<LemmaReport> lemma_suite(const ContextPtr& ctx, std::uint64_t seed,
                                     const SuiteOptions& opts = {});

bool suite_passed(const std::vector<LemmaReport>& reports);

// Text rendering without timing, so identical seeds give identical bytes.
std::string render_reports(const std::vector<LemmaReport>& reports);

}  // namespace ore
