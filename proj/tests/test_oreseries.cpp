#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ore/oreseries.hpp"

using namespace ore;

namespace {

AlgebraElement gen_y(const ContextPtr& ctx, std::size_t power = 1) {
    const auto& names = ctx->algebra()->basis_names;
    std::string want = power == 1 ? "y" : "y^" + std::to_string(power);
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == want) return AlgebraElement::basis(ctx->algebra(), k);
    throw std::runtime_error("no such generator");
}

OrePoly random_poly(Rng& rng, const ContextPtr& ctx, std::size_t max_deg) {
    std::size_t deg = rng.below(max_deg + 1);
    std::vector<AlgebraElement> cs;
    for (std::size_t k = 0; k <= deg; ++k) cs.push_back(random_element(rng, ctx->algebra()));
    return OrePoly::from_coeffs(ctx, std::move(cs));
}

// lambda * a * x^n with n > nildeg(a), the shape every series check uses
OrePoly random_quasi_input(Rng& rng, const ContextPtr& ctx) {
    AlgebraElement a = random_nonzero_element(rng, ctx->algebra());
    Scalar lambda = random_nonzero_scalar(rng, ctx->field());
    std::size_t n = nildeg(*ctx, a) + 1 + rng.below(3);
    return OrePoly::monomial(ctx, a.scaled(lambda), n);
}

}  // namespace

TEST_CASE("series_mul: zero, polynomial agreement, truncation") {
    for (ContextPtr ctx : {make_qp(5, 3, 2), make_qp(5, 4, 2), make_truncq(4),
                           make_nilq(5, 4, 2)}) {
        const std::size_t T = 16;
        Rng rng(31);
        OreSeries zero = OreSeries::zero(ctx, T);
        for (int t = 0; t < 60; ++t) {
            OrePoly f = random_poly(rng, ctx, 7);  // deg < T/2
            OrePoly g = random_poly(rng, ctx, 7);
            CHECK(series_mul(OreSeries::from_poly(f, T), zero).is_zero());
            OreSeries prod = series_mul(OreSeries::from_poly(f, T), OreSeries::from_poly(g, T));
            OreSeries expected = OreSeries::from_poly(mul_naive(f, g), T);
            REQUIRE(prod == expected);
        }
    }
}

TEST_CASE("series_mul frozen: QP(5,3,2), T = 8, (y x)^2") {
    ContextPtr qp = make_qp(5, 3, 2);
    OrePoly yx = OrePoly::monomial(qp, gen_y(qp), 1);
    OreSeries sq = series_mul(OreSeries::from_poly(yx, 8), OreSeries::from_poly(yx, 8));
    CHECK(sq == OreSeries::from_poly(mul_naive(yx, yx), 8));
    // (yx)(yx) = y sigma(y) x^2 + y delta(y) x = 2y^2 x^2 + y x
    CHECK(sq.coeff(1) == gen_y(qp));
    CHECK(sq.coeff(2) == gen_y(qp, 2).scaled(Scalar::from_int(2, qp->field())));
}

TEST_CASE("mismatched contexts and truncations are rejected") {
    ContextPtr qp = make_qp(5, 3, 2);
    ContextPtr nq = make_nilq(5, 4, 2);
    OreSeries a = OreSeries::zero(qp, 8);
    OreSeries b = OreSeries::zero(qp, 12);
    OreSeries c = OreSeries::zero(nq, 8);
    CHECK_THROWS_AS(series_mul(a, b), OreError);
    CHECK_THROWS_AS(series_mul(a, c), OreError);
    CHECK_THROWS_AS(OreSeries::zero(qp, 0), OreError);
}

TEST_CASE("quasi-inverse collapses when r^2 = 0") {
    // NILQ(5,4,2): r = y^3 x^3 has r^2 = 0, so s = -r and r + s + rs = -r^2 = 0
    ContextPtr nq = make_nilq(5, 4, 2);
    OrePoly r = OrePoly::monomial(nq, gen_y(nq, 3), 3);
    REQUIRE(mul_naive(r, r).is_zero());
    OreSeries s = quasi_inverse(r, 24);
    CHECK(s == OreSeries::from_poly(-r, 24));
    CHECK(quasi_check(r, s).ok);
}

TEST_CASE("quasi-inverse of zero is zero") {
    ContextPtr qp = make_qp(5, 3, 2);
    OreSeries s = quasi_inverse(OrePoly::zero(qp), 24);
    CHECK(s.is_zero());
    CHECK(quasi_check(OrePoly::zero(qp), s).ok);
}

TEST_CASE("quasi-inverse identity on the documented example r = y x^3 in QP(5,3,2)") {
    ContextPtr qp = make_qp(5, 3, 2);
    OrePoly r = OrePoly::monomial(qp, gen_y(qp), 3);
    OreSeries s = quasi_inverse(r, 20);
    CHECK(quasi_check(r, s).ok);
    // frozen leading coefficients: s = -y x^3 + 2y x^5 + 3y^2 x^6 + ...
    CHECK(s.coeff(3) == gen_y(qp).scaled(Scalar::from_int(4, qp->field())));
    CHECK(s.coeff(5) == gen_y(qp).scaled(Scalar::from_int(2, qp->field())));
    CHECK(s.coeff(6) == gen_y(qp, 2).scaled(Scalar::from_int(3, qp->field())));
    // the tail repeats forever, so no polynomial certificate here
    CHECK(!detect_polynomial(s, 6).certified);
}

TEST_CASE("quasi_check failure carries the first offending power") {
    // r = y x in TRUNCQ(3): r^2 = y^2 x^2 + y x != 0, so -r is not the
    // quasi-inverse and the defect first shows at power 1.
    ContextPtr tq = make_truncq(3);
    OrePoly r = OrePoly::monomial(tq, gen_y(tq), 1);
    OreSeries wrong = OreSeries::from_poly(-r, 12);
    auto qc = quasi_check(r, wrong);
    CHECK(!qc.ok);
    CHECK(qc.offending_power == 1);
    CHECK(qc.offending_coeff == "0 - y");

    CHECK(quasi_check(OrePoly::zero(tq), OreSeries::zero(tq, 12)).ok);
}

TEST_CASE("quasi-inverse identity and uniqueness on random inputs, all rings") {
    for (ContextPtr ctx : {make_qp(5, 3, 2), make_qp(5, 4, 2), make_truncq(4),
                           make_nilq(5, 4, 2), make_nilq(7, 5, 3)}) {
        Rng rng(1234);
        for (int t = 0; t < 50; ++t) {
            OrePoly r = random_quasi_input(rng, ctx);
            OreSeries s = quasi_inverse(r, 24);
            REQUIRE(quasi_check(r, s).ok);
            // uniqueness: the independent linear-solve path finds the same s
            REQUIRE(quasi_inverse_linear(r, 24) == s);
        }
    }
}

TEST_CASE("truncation consistency: T' > T agrees on the first T coefficients") {
    for (ContextPtr ctx : {make_qp(5, 3, 2), make_nilq(5, 4, 2), make_truncq(4)}) {
        Rng rng(55);
        for (int t = 0; t < 25; ++t) {
            OrePoly r = random_quasi_input(rng, ctx);
            OreSeries s24 = quasi_inverse(r, 24);
            OreSeries s30 = quasi_inverse(r, 30);
            for (std::size_t k = 0; k < 24; ++k) REQUIRE(s24.coeff(k) == s30.coeff(k));
        }
    }
}

TEST_CASE("nilpotent constant terms are allowed") {
    // r = y in QP(5,3,2): s = -y + y^2 - y^3 + ... = -y + y^2
    ContextPtr qp = make_qp(5, 3, 2);
    OrePoly r = OrePoly::monomial(qp, gen_y(qp), 0);
    OreSeries s = quasi_inverse(r, 8);
    CHECK(quasi_check(r, s).ok);
    CHECK(s.coeff(0) == gen_y(qp, 2) - gen_y(qp));
    for (std::size_t k = 1; k < 8; ++k) CHECK(s.coeff(k).is_zero());
}

TEST_CASE("non-nilpotent constant term is rejected up front") {
    ContextPtr qp = make_qp(5, 3, 2);
    OrePoly r = OrePoly::monomial(qp, AlgebraElement::unit(qp->algebra()), 0);
    try {
        quasi_inverse(r, 8);
        CHECK(false);
    } catch (const OreError& e) {
        CHECK(e.code() == errc::nonconvergent_constant_term);
    }
}

TEST_CASE("divergent geometric series is reported, not looped") {
    // QP(5,4,2), r = y x: the x^1 coefficient of every power is y, because
    // y*delta(y) = y. n = 1 is not above nildeg(y) = 2 and the paper's
    // convergence hypothesis genuinely fails here.
    ContextPtr qp = make_qp(5, 4, 2);
    OrePoly r = OrePoly::monomial(qp, gen_y(qp), 1);
    try {
        quasi_inverse(r, 12);
        CHECK(false);
    } catch (const OreError& e) {
        CHECK(e.code() == errc::nonconvergent_series);
    }
}

TEST_CASE("detect_polynomial cases") {
    ContextPtr nq = make_nilq(5, 4, 2);
    const std::size_t T = 24;

    // zero series: certified, with the zero-degree marker
    auto det0 = detect_polynomial(OreSeries::zero(nq, T), 4);
    CHECK(det0.certified);
    CHECK(!det0.degree.has_value());

    // collapsed series s = -r for r = y^3 x^3: certified of degree 3
    OrePoly r = OrePoly::monomial(nq, gen_y(nq, 3), 3);
    auto det3 = detect_polynomial(quasi_inverse(r, T), 6);
    CHECK(det3.certified);
    CHECK(det3.degree == 3);

    // a nonzero coefficient inside the guard window blocks certification
    OreSeries tail = OreSeries::from_poly(OrePoly::monomial(nq, gen_y(nq), T - 2), T);
    CHECK(!detect_polynomial(tail, 4).certified);

    CHECK_THROWS_AS(detect_polynomial(tail, T), OreError);
    try {
        detect_polynomial(tail, T + 5);
        CHECK(false);
    } catch (const OreError& e) {
        CHECK(e.code() == errc::guard_exceeds_truncation);
    }
}

TEST_CASE("quasi-inverse of y x^4 in NILQ(5,4,2) is the frozen cube") {
    // x^4 commutes with y here (tordeg(y) = 4 and the q-binomials vanish),
    // so the series is -y x^4 + y^2 x^8 - y^3 x^12 exactly.
    ContextPtr nq = make_nilq(5, 4, 2);
    OrePoly r = OrePoly::monomial(nq, gen_y(nq), 4);
    OreSeries s = quasi_inverse(r, 24);
    Scalar four = Scalar::from_int(4, nq->field());
    CHECK(s.coeff(4) == gen_y(nq).scaled(four));
    CHECK(s.coeff(8) == gen_y(nq, 2));
    CHECK(s.coeff(12) == gen_y(nq, 3).scaled(four));
    for (std::size_t k = 0; k < 24; ++k)
        if (k != 4 && k != 8 && k != 12) CHECK(s.coeff(k).is_zero());
    auto det = detect_polynomial(s, 6);
    CHECK(det.certified);
    CHECK(det.degree == 12);
}
