#include "ore/ring.hpp"

#include <sstream>

#include "ore/linsolve.hpp"

namespace ore {

// ---- AlgebraElement ---------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Scalar> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (coords_.size() != alg_->dim)
        fail(errc::ring_mismatch, "coordinate count " + std::to_string(coords_.size()) +
                                      " does not match dim " + std::to_string(alg_->dim));
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& alg) {
    return AlgebraElement(alg, std::vector<Scalar>(alg->dim, Scalar::zero(alg->field)));
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& alg, std::size_t k) {
    if (k >= alg->dim) fail(errc::index_out_of_range, "basis index " + std::to_string(k));
    auto e = zero(alg);
    e.coords_[k] = Scalar::one(alg->field);
    return e;
}

AlgebraElement AlgebraElement::unit(const AlgebraPtr& alg) {
    if (!alg->unital) fail(errc::ring_mismatch, alg->id + " has no unit");
    return basis(alg, alg->unit_index);
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

void AlgebraElement::require_same_ring(const AlgebraElement& o) const {
    if (!alg_ || !o.alg_ || alg_->id != o.alg_->id)
        fail(errc::ring_mismatch,
             (alg_ ? alg_->id : "<none>") + " vs " + (o.alg_ ? o.alg_->id : "<none>"));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_ring(o);
    AlgebraElement r = *this;
    for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] += o.coords_[k];
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same_ring(o);
    AlgebraElement r = *this;
    for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] -= o.coords_[k];
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_same_ring(o);
    const std::size_t d = alg_->dim;
    AlgebraElement r = zero(alg_);
    for (std::size_t i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coords_[j].is_zero()) continue;
            Scalar c = coords_[i] * o.coords_[j];
            const auto& prod = alg_->mul_table[i * d + j];
            for (std::size_t k = 0; k < d; ++k)
                if (!prod[k].is_zero()) r.coords_[k] += c * prod[k];
        }
    }
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r = *this;
    for (auto& x : r.coords_) x *= c;
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& x : r.coords_) x = -x;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (!alg_ || !o.alg_ || alg_->id != o.alg_->id) return false;
    return coords_ == o.coords_;
}

std::string AlgebraElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    const FieldSpec& fs = alg_->field;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Scalar& c = coords_[k];
        if (c.is_zero()) continue;
        bool negative = fs.kind == FieldKind::rationals && c.rational() < 0;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) out << "0 - ";  // keeps the text inside the expression grammar
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const std::string& name = alg_->basis_names[k];
        if (name == "1") {
            out << mag.to_string();
        } else if (mag.is_one()) {
            out << name;
        } else {
            out << mag.to_string() << "*" << name;
        }
    }
    if (first) out << "0";
    return out.str();
}

// ---- LinearMap --------------------------------------------------------------

LinearMap LinearMap::identity(std::size_t n, const FieldSpec& fs) {
    LinearMap m{n, std::vector<Scalar>(n * n, Scalar::zero(fs))};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fs);
    return m;
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(n, Scalar::zero(v.empty() ? FieldSpec::rationals() : v[0].field()));
    for (std::size_t r = 0; r < n; ++r) {
        Scalar acc = at(r, 0) * v[0];
        for (std::size_t c = 1; c < n; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

LinearMap LinearMap::compose(const LinearMap& o) const {
    LinearMap m{n, std::vector<Scalar>(n * n, Scalar::zero(entries[0].field()))};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
        }
    return m;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
    LinearMap m = *this;
    for (auto& x : m.entries) x *= c;
    return m;
}

bool LinearMap::is_zero() const {
    for (const auto& x : entries)
        if (!x.is_zero()) return false;
    return true;
}

bool LinearMap::operator==(const LinearMap& o) const { return n == o.n && entries == o.entries; }

// ---- OreContext -------------------------------------------------------------

OreContext::OreContext(AlgebraPtr alg, LinearMap sigma, LinearMap delta, Scalar qskew,
                       SearchCaps caps)
    : alg_(std::move(alg)),
      sigma_(std::move(sigma)),
      delta_(std::move(delta)),
      qskew_(std::move(qskew)) {
    if (qskew_.is_zero()) fail(errc::zero_q, "q-skew scalar must be nonzero");
    const std::size_t d = alg_->dim;
    if (sigma_.n != d || delta_.n != d)
        fail(errc::ring_mismatch, "map dimension does not match algebra dimension");
    caps_ = caps;
    if (caps_.nildeg == 0) caps_.nildeg = 4 * d;
    if (caps_.tordeg == 0) caps_.tordeg = 4 * d;

    std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(d, Scalar::zero(alg_->field)));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) rows[r][c] = sigma_.at(r, c);
    auto inv = invert_matrix(rows, alg_->field);
    if (!inv) fail(errc::singular_system, "sigma is not invertible");
    sigma_inv_ = LinearMap{d, std::vector<Scalar>(d * d, Scalar::zero(alg_->field))};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) sigma_inv_.at(r, c) = (*inv)[r][c];

    LinearMap pw = delta_;
    for (std::size_t k = 1; k <= caps_.nildeg; ++k) {
        if (pw.is_zero()) {
            delta_nilindex_ = k;
            break;
        }
        pw = delta_.compose(pw);
    }
    LinearMap id = LinearMap::identity(d, alg_->field);
    LinearMap sp = sigma_;
    for (std::size_t k = 1; k <= caps_.tordeg; ++k) {
        if (sp == id) {
            sigma_order_ = k;
            break;
        }
        sp = sigma_.compose(sp);
    }
}

// ---- registry ---------------------------------------------------------------

namespace {

// [j]_q = 1 + q + ... + q^{j-1}
Scalar q_integer(std::size_t j, const Scalar& q) {
    Scalar acc = Scalar::zero(q.field());
    Scalar pw = Scalar::one(q.field());
    for (std::size_t k = 0; k < j; ++k) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

AlgebraPtr make_truncated_poly_algebra(const std::string& id, const FieldSpec& fs, std::size_t m) {
    auto alg = std::make_shared<Algebra>();
    alg->id = id;
    alg->field = fs;
    alg->dim = m;
    alg->unital = true;
    alg->unit_index = 0;
    for (std::size_t j = 0; j < m; ++j)
        alg->basis_names.push_back(j == 0 ? "1" : (j == 1 ? "y" : "y^" + std::to_string(j)));
    alg->mul_table.assign(m * m, std::vector<Scalar>(m, Scalar::zero(fs)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i + j < m) alg->mul_table[i * m + j][i + j] = Scalar::one(fs);
    return alg;
}

}  // namespace

ContextPtr make_qp(std::uint64_t p, std::size_t m, std::uint64_t q, SearchCaps caps) {
    if (m < 1) fail(errc::invalid_ring_spec, "QP needs m >= 1");
    FieldSpec fs = FieldSpec::prime(p);
    Scalar qs = Scalar::from_int(static_cast<long>(q), fs);
    if (qs.is_zero()) fail(errc::invalid_ring_spec, "QP needs q nonzero mod p");
    std::ostringstream id;
    id << "QP:" << p << "," << m << "," << q;
    auto alg = make_truncated_poly_algebra(id.str(), fs, m);

    LinearMap sigma{m, std::vector<Scalar>(m * m, Scalar::zero(fs))};
    LinearMap delta{m, std::vector<Scalar>(m * m, Scalar::zero(fs))};
    for (std::size_t j = 0; j < m; ++j) {
        sigma.at(j, j) = qs.pow(static_cast<long>(j));
        if (j >= 1) delta.at(j - 1, j) = q_integer(j, qs);
    }
    return std::make_shared<OreContext>(alg, sigma, delta, qs, caps);
}

ContextPtr make_truncq(std::size_t m, SearchCaps caps) {
    if (m < 1) fail(errc::invalid_ring_spec, "TRUNCQ needs m >= 1");
    FieldSpec fs = FieldSpec::rationals();
    auto alg = make_truncated_poly_algebra("TRUNCQ:" + std::to_string(m), fs, m);
    LinearMap sigma = LinearMap::identity(m, fs);
    LinearMap delta{m, std::vector<Scalar>(m * m, Scalar::zero(fs))};
    for (std::size_t j = 1; j < m; ++j) delta.at(j - 1, j) = Scalar::from_int(static_cast<long>(j), fs);
    return std::make_shared<OreContext>(alg, sigma, delta, Scalar::one(fs), caps);
}

ContextPtr make_nilq(std::uint64_t p, std::size_t m, std::uint64_t q, SearchCaps caps) {
    if (m < 2) fail(errc::invalid_ring_spec, "NILQ needs m >= 2");
    FieldSpec fs = FieldSpec::prime(p);
    Scalar qs = Scalar::from_int(static_cast<long>(q), fs);
    if (qs.is_zero()) fail(errc::invalid_ring_spec, "NILQ needs q nonzero mod p");
    std::ostringstream id;
    id << "NILQ:" << p << "," << m << "," << q;

    const std::size_t dim = m - 1;  // basis y, y^2, ..., y^{m-1}
    auto alg = std::make_shared<Algebra>();
    alg->id = id.str();
    alg->field = fs;
    alg->dim = dim;
    alg->unital = false;
    for (std::size_t k = 0; k < dim; ++k)
        alg->basis_names.push_back(k == 0 ? "y" : "y^" + std::to_string(k + 1));
    alg->mul_table.assign(dim * dim, std::vector<Scalar>(dim, Scalar::zero(fs)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::size_t deg = (i + 1) + (j + 1);  // y^deg
            if (deg <= m - 1) alg->mul_table[i * dim + j][deg - 1] = Scalar::one(fs);
        }

    LinearMap sigma{dim, std::vector<Scalar>(dim * dim, Scalar::zero(fs))};
    LinearMap delta{dim, std::vector<Scalar>(dim * dim, Scalar::zero(fs))};
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t j = k + 1;  // basis k is y^j
        sigma.at(k, k) = qs.pow(static_cast<long>(j));
        if (j + 1 <= m - 1) delta.at(k + 1, k) = q_integer(j, qs);
    }
    // delta.sigma = q^{-1} sigma.delta here, so the context's skew scalar is q^{-1}.
    return std::make_shared<OreContext>(alg, sigma, delta, qs.inverse(), caps);
}

RingSpec RingSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        fail(errc::invalid_ring_spec, "expected FAMILY:params, got \"" + std::string(text) + "\"");
    std::string fam(text.substr(0, colon));
    for (auto& ch : fam) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::vector<std::uint64_t> params;
    std::uint64_t cur = 0;
    bool have_digit = false;
    for (char c : text.substr(colon + 1)) {
        if (c == ',') {
            if (!have_digit) fail(errc::invalid_ring_spec, "malformed ring parameters");
            params.push_back(cur);
            cur = 0;
            have_digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
            have_digit = true;
        } else {
            fail(errc::invalid_ring_spec, "malformed ring parameters");
        }
    }
    if (!have_digit) fail(errc::invalid_ring_spec, "malformed ring parameters");
    params.push_back(cur);

    RingSpec spec{};
    if (fam == "QP" || fam == "NILQ") {
        if (params.size() != 3)
            fail(errc::invalid_ring_spec, fam + " takes parameters p,m,q");
        spec.family = fam == "QP" ? RingFamily::qp : RingFamily::nilq;
        spec.p = params[0];
        spec.m = static_cast<std::size_t>(params[1]);
        spec.q = params[2];
    } else if (fam == "TRUNCQ") {
        if (params.size() != 1) fail(errc::invalid_ring_spec, "TRUNCQ takes parameter m");
        spec.family = RingFamily::truncq;
        spec.m = static_cast<std::size_t>(params[0]);
    } else {
        fail(errc::invalid_ring_spec, "unknown ring family \"" + fam + "\"");
    }
    return spec;
}

std::string RingSpec::to_string() const {
    std::ostringstream out;
    switch (family) {
        case RingFamily::qp: out << "QP:" << p << "," << m << "," << q; break;
        case RingFamily::truncq: out << "TRUNCQ:" << m; break;
        case RingFamily::nilq: out << "NILQ:" << p << "," << m << "," << q; break;
    }
    return out.str();
}

ContextPtr RingSpec::make(SearchCaps caps) const {
    switch (family) {
        case RingFamily::qp: return make_qp(p, m, q, caps);
        case RingFamily::truncq: return make_truncq(m, caps);
        case RingFamily::nilq: return make_nilq(p, m, q, caps);
    }
    fail(errc::invalid_ring_spec, "unreachable");
}

// ---- operations -------------------------------------------------------------

namespace {

void require_ring(const OreContext& ctx, const AlgebraElement& a) {
    if (a.algebra()->id != ctx.id())
        fail(errc::ring_mismatch, a.algebra()->id + " element used with context " + ctx.id());
}

}  // namespace

AlgebraElement sigma_apply(const OreContext& ctx, const AlgebraElement& a, long k) {
    require_ring(ctx, a);
    const LinearMap& m = k >= 0 ? ctx.sigma() : ctx.sigma_inverse();
    std::size_t reps = static_cast<std::size_t>(k >= 0 ? k : -k);
    if (k >= 0 && ctx.sigma_order()) reps %= *ctx.sigma_order();
    std::vector<Scalar> v = a.coords();
    for (std::size_t i = 0; i < reps; ++i) v = m.apply(v);
    return AlgebraElement(a.algebra(), std::move(v));
}

AlgebraElement delta_apply(const OreContext& ctx, const AlgebraElement& a, std::size_t k) {
    require_ring(ctx, a);
    if (ctx.delta_nilindex() && k >= *ctx.delta_nilindex())
        return AlgebraElement::zero(a.algebra());
    std::vector<Scalar> v = a.coords();
    for (std::size_t i = 0; i < k; ++i) v = ctx.delta().apply(v);
    return AlgebraElement(a.algebra(), std::move(v));
}

std::size_t nildeg(const OreContext& ctx, const AlgebraElement& a) {
    require_ring(ctx, a);
    AlgebraElement b = a;
    for (std::size_t n = 0; n <= ctx.nildeg_cap(); ++n) {
        if (b.is_zero()) return n;
        b = delta_apply(ctx, b, 1);
    }
    fail(errc::cap_exceeded,
         "no N <= " + std::to_string(ctx.nildeg_cap()) + " with delta^N(a) = 0 in " + ctx.id());
}

std::size_t tordeg(const OreContext& ctx, const AlgebraElement& a) {
    require_ring(ctx, a);
    AlgebraElement b = sigma_apply(ctx, a, 1);
    for (std::size_t m = 1; m <= ctx.tordeg_cap(); ++m) {
        if (b == a) return m;
        b = sigma_apply(ctx, b, 1);
    }
    fail(errc::cap_exceeded,
         "no m <= " + std::to_string(ctx.tordeg_cap()) + " with sigma^m(a) = a in " + ctx.id());
}

// ---- check_context ----------------------------------------------------------

namespace {

std::string pair_witness(const AlgebraElement& a, const AlgebraElement& b,
                         const AlgebraElement& lhs, const AlgebraElement& rhs) {
    return "a=" + a.to_string() + ", b=" + b.to_string() + ", lhs=" + lhs.to_string() +
           ", rhs=" + rhs.to_string();
}

void check_pair(const OreContext& ctx, const AlgebraElement& a, const AlgebraElement& b,
                AxiomCheck& mult, AxiomCheck& leibniz) {
    AlgebraElement ab = a * b;

    AlgebraElement lhs = sigma_apply(ctx, ab, 1);
    AlgebraElement rhs = sigma_apply(ctx, a, 1) * sigma_apply(ctx, b, 1);
    ++mult.pairs_checked;
    if (lhs != rhs) {
        mult.passed = false;
        mult.witnesses.push_back(pair_witness(a, b, lhs, rhs));
    }

    AlgebraElement dl = delta_apply(ctx, ab, 1);
    AlgebraElement dr = sigma_apply(ctx, a, 1) * delta_apply(ctx, b, 1) + delta_apply(ctx, a, 1) * b;
    ++leibniz.pairs_checked;
    if (dl != dr) {
        leibniz.passed = false;
        leibniz.witnesses.push_back(pair_witness(a, b, dl, dr));
    }
}

}  // namespace

ContextReport check_context(const OreContext& ctx, std::size_t trials, std::uint64_t seed) {
    ContextReport report;
    AxiomCheck mult{"sigma_multiplicative", true, 0, {}};
    AxiomCheck leibniz{"delta_leibniz", true, 0, {}};
    AxiomCheck qskew{"qskew_commutation", true, 0, {}};

    const auto& alg = ctx.algebra();
    for (std::size_t i = 0; i < alg->dim; ++i)
        for (std::size_t j = 0; j < alg->dim; ++j)
            check_pair(ctx, AlgebraElement::basis(alg, i), AlgebraElement::basis(alg, j), mult,
                       leibniz);

    Rng rng = Rng::stream(seed, "check_context");
    for (std::size_t t = 0; t < trials; ++t)
        check_pair(ctx, random_element(rng, alg), random_element(rng, alg), mult, leibniz);

    LinearMap lhs = ctx.sigma().compose(ctx.delta()).scaled(ctx.qskew());
    LinearMap rhs = ctx.delta().compose(ctx.sigma());
    qskew.pairs_checked = 1;
    if (!(lhs == rhs)) {
        qskew.passed = false;
        for (std::size_t r = 0; r < lhs.n; ++r)
            for (std::size_t c = 0; c < lhs.n; ++c)
                if (lhs.at(r, c) != rhs.at(r, c))
                    qskew.witnesses.push_back("entry (" + std::to_string(r) + "," +
                                              std::to_string(c) + "): q*sigma.delta=" +
                                              lhs.at(r, c).to_string() + ", delta.sigma=" +
                                              rhs.at(r, c).to_string());
    }

    report.trials = alg->dim * alg->dim + trials;
    report.checks = {std::move(mult), std::move(leibniz), std::move(qskew)};
    return report;
}

// ---- random generation --------------------------------------------------------

Scalar random_scalar(Rng& rng, const FieldSpec& fs) {
    if (fs.kind == FieldKind::prime_field)
        return Scalar::from_int(static_cast<long>(rng.below(fs.p)), fs);
    long num = rng.range(-8, 8);
    long den = rng.range(1, 8);
    return Scalar::from_fraction(num, den, fs);
}

Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& fs) {
    for (;;) {
        Scalar s = random_scalar(rng, fs);
        if (!s.is_zero()) return s;
    }
}

AlgebraElement random_element(Rng& rng, const AlgebraPtr& alg) {
    std::vector<Scalar> coords;
    coords.reserve(alg->dim);
    for (std::size_t k = 0; k < alg->dim; ++k) coords.push_back(random_scalar(rng, alg->field));
    return AlgebraElement(alg, std::move(coords));
}

AlgebraElement random_nonzero_element(Rng& rng, const AlgebraPtr& alg) {
    for (;;) {
        AlgebraElement a = random_element(rng, alg);
        if (!a.is_zero()) return a;
    }
}

}  // namespace ore
