#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "ore/qbinom.hpp"
#include "support/oracles.hpp"

using namespace ore;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("small frozen values") {
    CHECK(gauss_binom(2, 1).to_string() == "1 + t");
    for (long n = 0; n <= 8; ++n) {
        CHECK(gauss_binom(n, 0).to_string() == "1");
        CHECK(gauss_binom(n, n).to_string() == "1");
    }
    // expanded product formula for (4,2)
    GaussPolynomial g = gauss_binom(4, 2);
    std::vector<mpz_class> expected = {1, 1, 2, 1, 1};
    CHECK(g.coeffs == expected);
    CHECK(g.to_string() == "1 + t + 2*t^2 + t^3 + t^4");
}

TEST_CASE("recurrence equals product-formula oracle up to n = 12") {
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            auto expected = oracles::gauss_binom_product_formula(n, i);
            CHECK(gauss_binom(static_cast<long>(n), static_cast<long>(i)).coeffs == expected);
        }
}

TEST_CASE("structural invariants: degree, nonnegativity, palindrome, t = 1") {
    for (long n = 0; n <= 12; ++n)
        for (long i = 0; i <= n; ++i) {
            GaussPolynomial g = gauss_binom(n, i);
            CHECK(g.degree() == i * (n - i));
            for (const auto& c : g.coeffs) CHECK(c >= 0);
            for (std::size_t k = 0; k < g.coeffs.size(); ++k)
                CHECK(g.coeffs[k] == g.coeffs[g.coeffs.size() - 1 - k]);
            // value at t = 1 is the ordinary binomial
            mpz_class sum = 0;
            for (const auto& c : g.coeffs) sum += c;
            CHECK(sum == oracles::binomial(static_cast<std::size_t>(n),
                                           static_cast<std::size_t>(i)));
            // symmetry in the second index
            CHECK(g.coeffs == gauss_binom(n, n - i).coeffs);
        }
}

TEST_CASE("evaluation examples") {
    // (2,1,q) = q + 1
    Scalar q = Scalar::from_fraction(3, 7, QQ);
    CHECK(qbinom_eval(2, 1, q) == q + Scalar::one(QQ));
    // (4,2,1) = 6, the ordinary binomial
    CHECK(qbinom_eval(4, 2, Scalar::one(QQ)) == Scalar::from_int(6, QQ));
    // (4,2, q=2 in F5): 1+2+8+8+16 = 35 = 0 mod 5
    CHECK(qbinom_eval(4, 2, Scalar::from_int(2, F5)).is_zero());
}

TEST_CASE("evaluation at q = 1 recovers binomials for all n <= 12") {
    for (long n = 0; n <= 12; ++n)
        for (long i = 0; i <= n; ++i) {
            Scalar v = qbinom_eval(n, i, Scalar::one(QQ));
            CHECK(v == Scalar::from_mpq(
                           mpq_class(oracles::binomial(static_cast<std::size_t>(n),
                                                       static_cast<std::size_t>(i))),
                           QQ));
        }
}

TEST_CASE("evaluation at roots of unity matches an independent field recurrence") {
    // every nonzero q in F5 is a root of unity (q^4 = 1)
    for (long qv = 1; qv <= 4; ++qv) {
        Scalar q = Scalar::from_int(qv, F5);
        for (std::size_t n = 0; n <= 12; ++n)
            for (std::size_t i = 0; i <= n; ++i)
                CHECK(qbinom_eval(static_cast<long>(n), static_cast<long>(i), q) ==
                      oracles::qbinom_field_recurrence(n, i, q));
    }
}

TEST_CASE("product formula cross-check where the denominator is nonzero") {
    // at q = 2 in F5 the (4,2) quotient evaluates to 0/4 = 0, agreeing with
    // the polynomial evaluation even though t = q is a root of unity
    Scalar q = Scalar::from_int(2, F5);
    Scalar num = Scalar::one(F5), den = Scalar::one(F5);
    for (long k = 1; k <= 4; ++k) num *= q.pow(k) - Scalar::one(F5);
    for (long k = 1; k <= 2; ++k) {
        den *= q.pow(k) - Scalar::one(F5);
        den *= q.pow(k) - Scalar::one(F5);
    }
    REQUIRE(!den.is_zero());
    CHECK(num / den == qbinom_eval(4, 2, q));
}

TEST_CASE("gauss product identity ties whole rows together") {
    // sum_k C(n,k)_q q^{k(k-1)/2} z^k = prod_{j=0}^{n-1} (1 + q^j z)
    for (long qn : {2, 3, -1}) {
        for (long zn : {1, 2, -3}) {
            Scalar q = Scalar::from_fraction(qn, 2, QQ);
            Scalar z = Scalar::from_fraction(zn, 5, QQ);
            for (long n = 0; n <= 10; ++n) {
                Scalar lhs = Scalar::zero(QQ);
                for (long k = 0; k <= n; ++k)
                    lhs += qbinom_eval(n, k, q) * q.pow(k * (k - 1) / 2) * z.pow(k);
                Scalar rhs = Scalar::one(QQ);
                for (long j = 0; j < n; ++j) rhs *= Scalar::one(QQ) + q.pow(j) * z;
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("memo table is safe under concurrent access") {
    std::vector<std::thread> workers;
    std::vector<bool> results(4, false);
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([w, &results] {
            bool ok = true;
            for (long n = 0; n <= 40; ++n)
                for (long i = 0; i <= n; i += 3) {
                    GaussPolynomial g = gauss_binom(n, i);
                    ok = ok && g.degree() == i * (n - i);
                }
            results[static_cast<std::size_t>(w)] = ok;
        });
    for (auto& t : workers) t.join();
    for (bool ok : results) CHECK(ok);
    // entries are deterministic, whichever thread filled them
    CHECK(gauss_binom(40, 3).coeffs == oracles::gauss_binom_product_formula(40, 3));
}

TEST_CASE("errors and the memo cap boundary") {
    CHECK_THROWS_AS(gauss_binom(3, 4), OreError);
    CHECK_THROWS_AS(gauss_binom(-1, 0), OreError);
    CHECK_THROWS_AS(gauss_binom(4, -2), OreError);
    CHECK_THROWS_AS(qbinom_eval(4, 2, Scalar::zero(QQ)), OreError);

    // beyond the memo cap the uncached path must agree with the recurrence
    long n = qbinom_memo_cap() + 6;
    GaussPolynomial big = gauss_binom(n, 2);
    CHECK(big.degree() == 2 * (n - 2));
    // C(n,1)_t = 1 + t + ... + t^{n-1}
    GaussPolynomial row1 = gauss_binom(n, 1);
    CHECK(row1.degree() == n - 1);
    for (const auto& c : row1.coeffs) CHECK(c == 1);
}

TEST_CASE("memo cap is adjustable and never changes values") {
    long saved = qbinom_memo_cap();
    CHECK(saved == 64);
    set_qbinom_memo_cap(4);
    CHECK(gauss_binom(10, 3).coeffs == oracles::gauss_binom_product_formula(10, 3));
    set_qbinom_memo_cap(saved);
    CHECK(gauss_binom(10, 3).coeffs == oracles::gauss_binom_product_formula(10, 3));
}
