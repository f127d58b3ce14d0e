#pragma once

// Test-only oracles, kept independent of the library's computation paths.

#include <gmpxx.h>

#include <vector>

#include "ore/scalar.hpp"

namespace oracles {

using Poly = std::vector<mpq_class>;  // dense, index = power of t

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// t^k - 1
inline Poly cyclo_factor(std::size_t k) {
    Poly p(k + 1, mpq_class(0));
    p[0] = -1;
    p[k] = 1;
    return p;
}

// Exact long division; the caller promises divisibility.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    Poly quot(num.size() - den.size() + 1, mpq_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpq_class c = num[k + den.size() - 1] / den.back();
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::runtime_error("inexact polynomial division");
    return quot;
}

// The quotient-of-products form of the Gaussian binomial, expanded in the
// rational-function field: prod_{k=1..n}(t^k-1) over
// prod_{k=1..i}(t^k-1) * prod_{k=1..n-i}(t^k-1).
inline std::vector<mpz_class> gauss_binom_product_formula(std::size_t n, std::size_t i) {
    Poly num = {mpq_class(1)};
    for (std::size_t k = 1; k <= n; ++k) num = poly_mul(num, cyclo_factor(k));
    Poly den = {mpq_class(1)};
    for (std::size_t k = 1; k <= i; ++k) den = poly_mul(den, cyclo_factor(k));
    for (std::size_t k = 1; k <= n - i; ++k) den = poly_mul(den, cyclo_factor(k));
    Poly q = poly_div_exact(std::move(num), den);
    while (!q.empty() && q.back() == 0) q.pop_back();
    std::vector<mpz_class> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        if (c.get_den() != 1) throw std::runtime_error("non-integer gaussian coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

inline mpz_class binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class acc = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        acc *= static_cast<unsigned long>(n - k + j);
        acc /= static_cast<unsigned long>(j);
    }
    return acc;
}

// q-Pascal recurrence run directly in the coefficient field (no polynomial
// intermediate): an independent route to C(n,i)_q.
inline ore::Scalar qbinom_field_recurrence(std::size_t n, std::size_t i, const ore::Scalar& q) {
    using ore::Scalar;
    const ore::FieldSpec& fs = q.field();
    std::vector<Scalar> row = {Scalar::one(fs)};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<Scalar> next(r + 1, Scalar::one(fs));
        for (std::size_t j = 1; j < r; ++j)
            next[j] = row[j - 1] + q.pow(static_cast<long>(j)) * row[j];
        row = std::move(next);
    }
    return row[i];
}

}  // namespace oracles
