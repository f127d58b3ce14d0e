#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ore/orepoly.hpp"

namespace ore {

/// Ore power series truncated at an explicit order T: all arithmetic is exact
/// modulo x^T, and T travels with every value. Multiplication extends the
/// polynomial rule term by term; local nilpotence of delta keeps every output
/// coefficient a finite sum.
class OreSeries {
public:
    OreSeries() = default;

    static OreSeries zero(ContextPtr ctx, std::size_t trunc);
    static OreSeries from_poly(const OrePoly& f, std::size_t trunc);

    const ContextPtr& context() const { return ctx_; }
    std::size_t trunc_order() const { return trunc_; }
    AlgebraElement coeff(std::size_t k) const;  // zero for k >= T
    const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // Largest k < T with nonzero coefficient; nullopt for the zero series.
    std::optional<std::size_t> top_power() const;

    OreSeries operator+(const OreSeries& o) const;
    OreSeries operator-() const;
    bool operator==(const OreSeries& o) const;
    bool operator!=(const OreSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::size_t trunc_ = 0;
    std::vector<AlgebraElement> coeffs_;  // exactly T entries
};

// Product modulo x^T. ContextMismatch / TruncationMismatch on disagreement.
OreSeries series_mul(const OreSeries& f, const OreSeries& g);

// Quasi-inverse s of r: the unique s with r + s + r*s = 0, computed as the
// geometric series sum_{i>=1} (-r)^i truncated at T. The constant term of r
// must be zero or nilpotent (NonconvergentConstantTerm otherwise); the series
// itself can still fail to settle when the x-degree does not grow -- that is
// reported as NonconvergentSeries once the term cap is hit.
OreSeries quasi_inverse(const OrePoly& r, std::size_t trunc, std::size_t max_terms = 0);

// Independent second path: solve the truncated linear system
// (1 + L_r) s = -r coefficient by coefficient with exact elimination.
// Exists to witness uniqueness of the quasi-inverse; not the production path.
OreSeries quasi_inverse_linear(const OrePoly& r, std::size_t trunc);

struct QuasiCheckResult {
    bool ok = false;
    // First power with a nonzero coefficient of r + s + r*s, with that value.
    std::optional<std::size_t> offending_power;
    std::string offending_coeff;
};

// True iff r + s + r*s = 0 modulo x^T.
QuasiCheckResult quasi_check(const OrePoly& r, const OreSeries& s);

struct PolynomialDetection {
    bool certified = false;                // top `guard` coefficients all vanish
    std::optional<std::size_t> degree;     // head degree; nullopt for the zero series
};

// Certification up to truncation, never a proof: if the top `guard`
// coefficients of s are all zero, report the degree of the nonzero head.
PolynomialDetection detect_polynomial(const OreSeries& s, std::size_t guard);

}  // namespace ore
