#include "ore/orepoly.hpp"

#include <sstream>

#include "ore/qbinom.hpp"

namespace ore {

namespace {

void require_same_context(const OrePoly& f, const OrePoly& g) {
    if (!f.context() || !g.context() || f.context()->id() != g.context()->id())
        fail(errc::context_mismatch,
             (f.context() ? f.context()->id() : "<none>") + " vs " +
                 (g.context() ? g.context()->id() : "<none>"));
}

}  // namespace

OrePoly OrePoly::zero(ContextPtr ctx) {
    OrePoly p;
    p.ctx_ = std::move(ctx);
    return p;
}

OrePoly OrePoly::from_coeffs(ContextPtr ctx, std::vector<AlgebraElement> coeffs) {
    OrePoly p;
    p.ctx_ = std::move(ctx);
    for (const auto& c : coeffs)
        if (c.algebra()->id != p.ctx_->id())
            fail(errc::context_mismatch, "coefficient from " + c.algebra()->id + " in " + p.ctx_->id());
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

OrePoly OrePoly::monomial(ContextPtr ctx, const AlgebraElement& a, std::size_t n) {
    std::vector<AlgebraElement> cs(n + 1, AlgebraElement::zero(a.algebra()));
    cs[n] = a;
    return from_coeffs(std::move(ctx), std::move(cs));
}

void OrePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> OrePoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

AlgebraElement OrePoly::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return AlgebraElement::zero(ctx_->algebra());
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    require_same_context(*this, o);
    std::vector<AlgebraElement> cs(std::max(coeffs_.size(), o.coeffs_.size()),
                                   AlgebraElement::zero(ctx_->algebra()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) cs[k] = cs[k] + coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) cs[k] = cs[k] + o.coeffs_[k];
    return from_coeffs(ctx_, std::move(cs));
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::scaled(const Scalar& c) const {
    std::vector<AlgebraElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a.scaled(c));
    return from_coeffs(ctx_, std::move(cs));
}

OrePoly OrePoly::operator-() const {
    std::vector<AlgebraElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(-a);
    return from_coeffs(ctx_, std::move(cs));
}

OrePoly OrePoly::coeff_premul(const AlgebraElement& a) const {
    std::vector<AlgebraElement> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(a * c);
    return from_coeffs(ctx_, std::move(cs));
}

OrePoly OrePoly::shifted(std::size_t k) const {
    if (coeffs_.empty() || k == 0) return *this;
    std::vector<AlgebraElement> cs(coeffs_.size() + k, AlgebraElement::zero(ctx_->algebra()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
    return from_coeffs(ctx_, std::move(cs));
}

bool OrePoly::operator==(const OrePoly& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->id() != o.ctx_->id()) return false;
    return coeffs_ == o.coeffs_;
}

std::string OrePoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const AlgebraElement& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = c.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out << cs;
            continue;
        }
        bool is_unit_coeff = ctx_->algebra()->unital && c == AlgebraElement::unit(ctx_->algebra());
        if (!is_unit_coeff) {
            if (composite)
                out << "(" << cs << ")*";
            else
                out << cs << "*";
        }
        out << "x";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

OrePoly poly_add(const OrePoly& f, const OrePoly& g) { return f + g; }

OrePoly push_x_once(const OrePoly& f) {
    const ContextPtr& ctx = f.context();
    if (f.is_zero()) return f;
    std::vector<AlgebraElement> cs(f.coeffs().size() + 1, AlgebraElement::zero(ctx->algebra()));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        const AlgebraElement& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        cs[k + 1] = cs[k + 1] + sigma_apply(*ctx, c, 1);
        cs[k] = cs[k] + delta_apply(*ctx, c, 1);
    }
    return OrePoly::from_coeffs(ctx, std::move(cs));
}

OrePoly x_pow_times(const ContextPtr& ctx, const AlgebraElement& a, std::size_t n) {
    if (a.algebra()->id != ctx->id())
        fail(errc::context_mismatch, a.algebra()->id + " element in " + ctx->id());
    std::vector<AlgebraElement> delta_pows(n + 1, a);  // delta_pows[k] = delta^k(a)
    for (std::size_t k = 1; k <= n; ++k) delta_pows[k] = delta_apply(*ctx, delta_pows[k - 1], 1);

    std::vector<AlgebraElement> cs(n + 1, AlgebraElement::zero(ctx->algebra()));
    for (std::size_t i = 0; i <= n; ++i) {
        const AlgebraElement& d = delta_pows[n - i];
        if (d.is_zero()) continue;
        Scalar c = qbinom_eval(static_cast<long>(n), static_cast<long>(i), ctx->qskew());
        if (c.is_zero()) continue;
        cs[i] = sigma_apply(*ctx, d, static_cast<long>(i)).scaled(c);
    }
    return OrePoly::from_coeffs(ctx, std::move(cs));
}

OrePoly mul_naive(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const ContextPtr& ctx = f.context();
    OrePoly acc = OrePoly::zero(ctx);
    OrePoly pushed = g;  // x^i * g, maintained incrementally
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) pushed = push_x_once(pushed);
        const AlgebraElement& a = f.coeffs()[i];
        if (a.is_zero()) continue;
        acc = acc + pushed.coeff_premul(a);
    }
    return acc;
}

OrePoly mul_goodearl(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const ContextPtr& ctx = f.context();
    OrePoly acc = OrePoly::zero(ctx);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const AlgebraElement& a = f.coeffs()[i];
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            const AlgebraElement& b = g.coeffs()[j];
            if (b.is_zero()) continue;
            acc = acc + x_pow_times(ctx, b, i).coeff_premul(a).shifted(j);
        }
    }
    return acc;
}

OrePoly pow_naive(const OrePoly& f, std::size_t m) {
    if (m == 0) fail(errc::validation_error, "pow_naive needs m >= 1");
    OrePoly acc = f;
    for (std::size_t k = 1; k < m; ++k) acc = mul_naive(f, acc);
    return acc;
}

AlgebraElement delta_pow_product(const ContextPtr& ctx, const AlgebraElement& a,
                                 const AlgebraElement& b, std::size_t n) {
    if (a.algebra()->id != ctx->id() || b.algebra()->id != ctx->id())
        fail(errc::context_mismatch, "element ring does not match context " + ctx->id());
    AlgebraElement acc = AlgebraElement::zero(ctx->algebra());
    AlgebraElement da = a;  // delta^i(a)
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) da = delta_apply(*ctx, da, 1);
        AlgebraElement db = delta_apply(*ctx, b, n - i);
        if (da.is_zero() || db.is_zero()) continue;
        Scalar c = qbinom_eval(static_cast<long>(n), static_cast<long>(i), ctx->qskew());
        if (c.is_zero()) continue;
        acc = acc + (sigma_apply(*ctx, da, static_cast<long>(n - i)) * db).scaled(c);
    }
    return acc;
}

OrePoly iterated_expand(const ContextPtr& ctx, const AlgebraElement& a, std::size_t n,
                        std::size_t m) {
    if (m == 0) fail(errc::validation_error, "iterated_expand needs m >= 1");
    if (a.algebra()->id != ctx->id())
        fail(errc::context_mismatch, a.algebra()->id + " element in " + ctx->id());

    // Precompute F_i(w) = C(n,i)_q sigma^i(delta^{n-i}(w)) as matrices? The
    // maps are cheap at desk scale; apply them elementwise instead.
    std::vector<Scalar> qb(n + 1, Scalar::zero(ctx->field()));
    for (std::size_t i = 0; i <= n; ++i)
        qb[i] = qbinom_eval(static_cast<long>(n), static_cast<long>(i), ctx->qskew());
    auto f_map = [&](std::size_t i, const AlgebraElement& w) {
        if (qb[i].is_zero()) return AlgebraElement::zero(ctx->algebra());
        AlgebraElement d = delta_apply(*ctx, w, n - i);
        if (d.is_zero()) return d;
        return sigma_apply(*ctx, d, static_cast<long>(i)).scaled(qb[i]);
    };

    // w[e] = sum over multi-indices with i_1+...+i_{j-1} = e of the nested
    // a F_{i_{j-1}}( ... a F_{i_1}(a)); one outer index added per step.
    std::vector<AlgebraElement> w = {a};
    for (std::size_t step = 2; step <= m; ++step) {
        std::vector<AlgebraElement> next((w.size() - 1) + n + 1,
                                         AlgebraElement::zero(ctx->algebra()));
        for (std::size_t e = 0; e < w.size(); ++e) {
            if (w[e].is_zero()) continue;
            for (std::size_t i = 0; i <= n; ++i) {
                AlgebraElement t = f_map(i, w[e]);
                if (t.is_zero()) continue;
                next[e + i] = next[e + i] + a * t;
            }
        }
        w = std::move(next);
    }

    std::vector<AlgebraElement> cs(w.size() + n, AlgebraElement::zero(ctx->algebra()));
    for (std::size_t e = 0; e < w.size(); ++e) cs[e + n] = w[e];
    return OrePoly::from_coeffs(ctx, std::move(cs));
}

}  // namespace ore
