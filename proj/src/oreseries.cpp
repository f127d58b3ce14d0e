#include "ore/oreseries.hpp"

#include <sstream>

#include "ore/linsolve.hpp"
#include "ore/qbinom.hpp"

namespace ore {

namespace {

void require_compatible(const OreSeries& f, const OreSeries& g) {
    if (!f.context() || !g.context() || f.context()->id() != g.context()->id())
        fail(errc::context_mismatch,
             (f.context() ? f.context()->id() : "<none>") + " vs " +
                 (g.context() ? g.context()->id() : "<none>"));
    if (f.trunc_order() != g.trunc_order())
        fail(errc::truncation_mismatch, "T=" + std::to_string(f.trunc_order()) + " vs T=" +
                                            std::to_string(g.trunc_order()));
}

// Nilpotency test for a ring element: in an algebra of dimension d a
// nilpotent element has index at most d+1.
bool is_nilpotent(const AlgebraElement& a) {
    if (a.is_zero()) return true;
    AlgebraElement p = a;
    for (std::size_t k = 1; k <= a.algebra()->dim; ++k) {
        p = p * a;
        if (p.is_zero()) return true;
    }
    return false;
}

}  // namespace

OreSeries OreSeries::zero(ContextPtr ctx, std::size_t trunc) {
    if (trunc == 0) fail(errc::truncation_mismatch, "truncation order must be positive");
    OreSeries s;
    s.trunc_ = trunc;
    s.coeffs_.assign(trunc, AlgebraElement::zero(ctx->algebra()));
    s.ctx_ = std::move(ctx);
    return s;
}

OreSeries OreSeries::from_poly(const OrePoly& f, std::size_t trunc) {
    OreSeries s = zero(f.context(), trunc);
    for (std::size_t k = 0; k < std::min<std::size_t>(trunc, f.coeffs().size()); ++k)
        s.coeffs_[k] = f.coeffs()[k];
    return s;
}

AlgebraElement OreSeries::coeff(std::size_t k) const {
    if (k < trunc_) return coeffs_[k];
    return AlgebraElement::zero(ctx_->algebra());
}

bool OreSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<std::size_t> OreSeries::top_power() const {
    for (std::size_t k = trunc_; k-- > 0;)
        if (!coeffs_[k].is_zero()) return k;
    return std::nullopt;
}

OreSeries OreSeries::operator+(const OreSeries& o) const {
    require_compatible(*this, o);
    OreSeries s = *this;
    for (std::size_t k = 0; k < trunc_; ++k) s.coeffs_[k] = s.coeffs_[k] + o.coeffs_[k];
    return s;
}

OreSeries OreSeries::operator-() const {
    OreSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

bool OreSeries::operator==(const OreSeries& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->id() != o.ctx_->id() || trunc_ != o.trunc_) return false;
    return coeffs_ == o.coeffs_;
}

std::string OreSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < trunc_; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = coeffs_[k].to_string();
        bool composite = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out << cs;
            continue;
        }
        out << (composite ? "(" + cs + ")*" : cs + "*") << "x";
        if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    out << " (mod x^" << trunc_ << ")";
    return out.str();
}

OreSeries series_mul(const OreSeries& f, const OreSeries& g) {
    require_compatible(f, g);
    const ContextPtr& ctx = f.context();
    const std::size_t T = f.trunc_order();
    OreSeries acc = OreSeries::zero(ctx, T);
    std::vector<AlgebraElement> out(T, AlgebraElement::zero(ctx->algebra()));
    for (std::size_t i = 0; i < T; ++i) {
        const AlgebraElement& a = f.coeffs()[i];
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < T; ++j) {
            const AlgebraElement& b = g.coeffs()[j];
            if (b.is_zero()) continue;
            // a x^i b x^j contributes a * (x^i b)_l at power l + j, l <= i.
            OrePoly t = x_pow_times(ctx, b, i);
            for (std::size_t l = 0; l < t.coeffs().size() && l + j < T; ++l) {
                const AlgebraElement& c = t.coeffs()[l];
                if (!c.is_zero()) out[l + j] = out[l + j] + a * c;
            }
        }
    }
    return OreSeries::from_poly(
        OrePoly::from_coeffs(ctx, std::move(out)), T);
}

OreSeries quasi_inverse(const OrePoly& r, std::size_t trunc, std::size_t max_terms) {
    const ContextPtr& ctx = r.context();
    AlgebraElement c0 = r.coeff(0);
    bool constant_present = !c0.is_zero();
    if (constant_present && !is_nilpotent(c0))
        fail(errc::nonconvergent_constant_term,
             "constant term " + c0.to_string() + " is not nilpotent in " + ctx->id());

    if (max_terms == 0) max_terms = (trunc + 2) * (ctx->dim() + 2);

    OreSeries neg_r = OreSeries::from_poly(-r, trunc);
    OreSeries power = neg_r;            // (-r)^i, left-iterated
    OreSeries acc = OreSeries::zero(ctx, trunc);
    std::size_t terms = 0;
    while (!power.is_zero()) {
        if (++terms > max_terms) {
            if (constant_present)
                fail(errc::nonconvergent_constant_term,
                     "geometric series did not settle within " + std::to_string(max_terms) +
                         " terms");
            fail(errc::nonconvergent_series,
                 "geometric series did not settle within " + std::to_string(max_terms) +
                     " terms (mod x^" + std::to_string(trunc) + ")");
        }
        acc = acc + power;
        power = series_mul(neg_r, power);
    }
    return acc;
}

OreSeries quasi_inverse_linear(const OrePoly& r, std::size_t trunc) {
    const ContextPtr& ctx = r.context();
    const std::size_t d = ctx->dim();
    const FieldSpec& fs = ctx->field();

    // The coefficient system for r + s + r*s = 0 is block lower triangular in
    // the x-power: equation k reads
    //   A(s_k) = -r_k - sum_{j<k} sum_i r_i C(i,k-j)_q sigma^{k-j}(delta^{i-(k-j)}(s_j)),
    // where A(w) = w + sum_i r_i delta^i(w) is the same map at every k.
    // One exact inversion of A followed by forward substitution solves it.
    auto apply_a = [&](const AlgebraElement& w) {
        AlgebraElement acc = w;
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
            const AlgebraElement& ri = r.coeffs()[i];
            if (ri.is_zero()) continue;
            AlgebraElement dw = delta_apply(*ctx, w, i);
            if (!dw.is_zero()) acc = acc + ri * dw;
        }
        return acc;
    };
    std::vector<std::vector<Scalar>> a_rows(d, std::vector<Scalar>(d, Scalar::zero(fs)));
    for (std::size_t b = 0; b < d; ++b) {
        AlgebraElement col = apply_a(AlgebraElement::basis(ctx->algebra(), b));
        for (std::size_t t = 0; t < d; ++t) a_rows[t][b] = col.coords()[t];
    }
    auto a_inv = invert_matrix(a_rows, fs);
    if (!a_inv) fail(errc::singular_system, "truncated quasi-inverse system is singular");
    auto solve_block = [&](const AlgebraElement& rhs) {
        std::vector<Scalar> out(d, Scalar::zero(fs));
        for (std::size_t t = 0; t < d; ++t)
            for (std::size_t c = 0; c < d; ++c) out[t] += (*a_inv)[t][c] * rhs.coords()[c];
        return AlgebraElement(ctx->algebra(), std::move(out));
    };

    std::vector<AlgebraElement> s(trunc, AlgebraElement::zero(ctx->algebra()));
    for (std::size_t k = 0; k < trunc; ++k) {
        AlgebraElement rhs = -r.coeff(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (s[j].is_zero()) continue;
            std::size_t l = k - j;
            for (std::size_t i = l; i < r.coeffs().size(); ++i) {
                const AlgebraElement& ri = r.coeffs()[i];
                if (ri.is_zero()) continue;
                Scalar c = qbinom_eval(static_cast<long>(i), static_cast<long>(l), ctx->qskew());
                if (c.is_zero()) continue;
                AlgebraElement dw = delta_apply(*ctx, s[j], i - l);
                if (dw.is_zero()) continue;
                rhs = rhs - (ri * sigma_apply(*ctx, dw, static_cast<long>(l))).scaled(c);
            }
        }
        s[k] = solve_block(rhs);
    }
    return OreSeries::from_poly(OrePoly::from_coeffs(ctx, std::move(s)), trunc);
}

QuasiCheckResult quasi_check(const OrePoly& r, const OreSeries& s) {
    OreSeries r_series = OreSeries::from_poly(r, s.trunc_order());
    OreSeries v = r_series + s + series_mul(r_series, s);
    QuasiCheckResult out;
    for (std::size_t k = 0; k < v.trunc_order(); ++k) {
        if (!v.coeff(k).is_zero()) {
            out.ok = false;
            out.offending_power = k;
            out.offending_coeff = v.coeff(k).to_string();
            return out;
        }
    }
    out.ok = true;
    return out;
}

PolynomialDetection detect_polynomial(const OreSeries& s, std::size_t guard) {
    if (guard >= s.trunc_order())
        fail(errc::guard_exceeds_truncation,
             "guard " + std::to_string(guard) + " >= T " + std::to_string(s.trunc_order()));
    PolynomialDetection out;
    for (std::size_t k = s.trunc_order() - guard; k < s.trunc_order(); ++k)
        if (!s.coeff(k).is_zero()) return out;  // not certified at this truncation
    out.certified = true;
    out.degree = s.top_power();
    return out;
}

}  // namespace ore
