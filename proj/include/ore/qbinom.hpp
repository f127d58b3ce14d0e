#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

// Gaussian binomial coefficient as an integer polynomial in t. Degree is
// i*(n-i), coefficients are nonnegative and palindromic, and the value at
// t = 1 is the ordinary binomial C(n,i).
struct GaussPolynomial {
    long n = 0;
    long i = 0;
    std::vector<mpz_class> coeffs;  // index = power of t, trailing entry nonzero

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    // Horner evaluation through the field's characteristic map, so roots of
    // unity are as safe as any other point.
    Scalar eval(const Scalar& q) const;

    std::string to_string() const;  // "1 + t + 2*t^2 + t^3 + t^4"

    bool operator==(const GaussPolynomial&) const = default;
};

// q-Pascal recurrence C(n,i)_t = C(n-1,i-1)_t + t^i * C(n-1,i)_t with
// C(n,0)_t = C(n,n)_t = 1. Rows up to the memo cap are cached behind a
// mutex; larger n is computed on the fly.
GaussPolynomial gauss_binom(long n, long i);

// Evaluation at t = q. Defined for every nonzero q, including roots of unity
// where the quotient-of-products formula degenerates to 0/0.
Scalar qbinom_eval(long n, long i, const Scalar& q);

// Cache bound for the (n,i) triangle, default 64. Raising it lets deeper
// rows be cached; lowering it stops new rows from being cached (existing
// rows are kept).
long qbinom_memo_cap();
void set_qbinom_memo_cap(long cap);

}  // namespace ore
