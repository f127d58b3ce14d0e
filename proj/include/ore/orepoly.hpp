#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ore/ring.hpp"

namespace ore {

/// Skew polynomials over an OreContext, written with left coefficients:
/// f = a_0 + a_1 x + ... + a_n x^n, and x r = sigma(r) x + delta(r).
///
/// Trailing zero coefficients are trimmed after every operation; the zero
/// polynomial has empty coefficient storage and degree() returns nullopt
/// (the "minus infinity" marker), never -1.
class OrePoly {
public:
    OrePoly() = default;

    static OrePoly zero(ContextPtr ctx);
    static OrePoly from_coeffs(ContextPtr ctx, std::vector<AlgebraElement> coeffs);
    // a * x^n
    static OrePoly monomial(ContextPtr ctx, const AlgebraElement& a, std::size_t n);

    const ContextPtr& context() const { return ctx_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    // Left coefficient at x^k; the zero element beyond the degree.
    AlgebraElement coeff(std::size_t k) const;
    const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }

    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const;
    OrePoly scaled(const Scalar& c) const;
    OrePoly operator-() const;
    // Left-multiply every coefficient by a ring element.
    OrePoly coeff_premul(const AlgebraElement& a) const;
    // Multiply by x^k on the right: coefficients shift up.
    OrePoly shifted(std::size_t k) const;

    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void trim();

    ContextPtr ctx_;
    std::vector<AlgebraElement> coeffs_;
};

OrePoly poly_add(const OrePoly& f, const OrePoly& g);

// One rewriting step: x * f, pushing a single x past every coefficient.
OrePoly push_x_once(const OrePoly& f);

// x^n * a as a polynomial: sum_i C(n,i)_q sigma^i(delta^{n-i}(a)) x^i.
OrePoly x_pow_times(const ContextPtr& ctx, const AlgebraElement& a, std::size_t n);

// Product by repeated single-x rewriting; the reference oracle for all
// multiplication.
OrePoly mul_naive(const OrePoly& f, const OrePoly& g);

// Product assembled from the q-binomial closed form of x^n * a. Agrees with
// mul_naive whenever q*sigma.delta = delta.sigma holds.
OrePoly mul_goodearl(const OrePoly& f, const OrePoly& g);

// f^m with powers accumulated as f * (f * (... )); m >= 1.
OrePoly pow_naive(const OrePoly& f, std::size_t m);

// Right side of the q-Leibniz formula:
// sum_i C(n,i)_q sigma^{n-i}(delta^i(a)) * delta^{n-i}(b).
AlgebraElement delta_pow_product(const ContextPtr& ctx, const AlgebraElement& a,
                                 const AlgebraElement& b, std::size_t n);

// (a x^n)^m expanded through the nested maps F_i(w) = C(n,i)_q sigma^i(delta^{n-i}(w)),
// computed as a dynamic program over the exponent offset (the multi-index sum
// has (n+1)^(m-1) terms; the recurrence collapses it). m = 0 is rejected.
OrePoly iterated_expand(const ContextPtr& ctx, const AlgebraElement& a, std::size_t n,
                        std::size_t m);

inline AlgebraElement coeff_at(const OrePoly& f, std::size_t k) { return f.coeff(k); }

}  // namespace ore
