#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ore/rng.hpp"
#include "ore/scalar.hpp"

namespace ore {

/// Base algebras R with their (sigma, delta, q) structure.
///
/// An Algebra is a finite-dimensional associative algebra presented on a
/// monomial basis with explicit structure constants; sigma and delta are
/// k-linear maps given by their basis matrices. Everything is exact and
/// immutable after construction, so contexts and elements are safe to share
/// across threads.

struct Algebra {
    std::string id;       // canonical ring spec, e.g. "QP:5,3,2"
    FieldSpec field;
    std::size_t dim = 0;
    bool unital = false;
    std::size_t unit_index = 0;  // meaningful when unital
    std::vector<std::string> basis_names;
    // mul_table[i*dim + j] = coordinates of e_i * e_j
    std::vector<std::vector<Scalar>> mul_table;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr alg, std::vector<Scalar> coords);

    static AlgebraElement zero(const AlgebraPtr& alg);
    static AlgebraElement basis(const AlgebraPtr& alg, std::size_t k);
    static AlgebraElement unit(const AlgebraPtr& alg);  // RingMismatch when non-unital

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // structure-constant product
    AlgebraElement scaled(const Scalar& c) const;
    AlgebraElement operator-() const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Grammar-compatible rendering, e.g. "3 + 4*y^2"; zero prints "0".
    std::string to_string() const;

private:
    void require_same_ring(const AlgebraElement& o) const;

    AlgebraPtr alg_;
    std::vector<Scalar> coords_;
};

// Square matrix over the coefficient field; column j holds the image of
// basis vector j.
struct LinearMap {
    std::size_t n = 0;
    std::vector<Scalar> entries;  // row-major

    static LinearMap identity(std::size_t n, const FieldSpec& fs);
    Scalar& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    LinearMap compose(const LinearMap& o) const;  // this after o
    LinearMap scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const LinearMap& o) const;
};

struct SearchCaps {
    std::size_t nildeg = 0;  // 0 means "use default 4*dim"
    std::size_t tordeg = 0;
};

class OreContext;
using ContextPtr = std::shared_ptr<const OreContext>;

class OreContext {
public:
    // sigma must be invertible; qskew nonzero. Axioms beyond that are not
    // enforced here -- check_context reports on them.
    OreContext(AlgebraPtr alg, LinearMap sigma, LinearMap delta, Scalar qskew,
               SearchCaps caps = {});

    const AlgebraPtr& algebra() const { return alg_; }
    const std::string& id() const { return alg_->id; }
    const FieldSpec& field() const { return alg_->field; }
    std::size_t dim() const { return alg_->dim; }
    const LinearMap& sigma() const { return sigma_; }
    const LinearMap& sigma_inverse() const { return sigma_inv_; }
    const LinearMap& delta() const { return delta_; }
    const Scalar& qskew() const { return qskew_; }
    std::size_t nildeg_cap() const { return caps_.nildeg; }
    std::size_t tordeg_cap() const { return caps_.tordeg; }

    // Cached structural data: least k with delta^k = 0 as a matrix, and the
    // order of sigma as a matrix, when found within the caps.
    std::optional<std::size_t> delta_nilindex() const { return delta_nilindex_; }
    std::optional<std::size_t> sigma_order() const { return sigma_order_; }

private:
    AlgebraPtr alg_;
    LinearMap sigma_, sigma_inv_, delta_;
    Scalar qskew_;
    SearchCaps caps_;
    std::optional<std::size_t> delta_nilindex_;
    std::optional<std::size_t> sigma_order_;
};

// ---- registry -------------------------------------------------------------

// QP(p,m,q):    F_p[y]/(y^m), sigma(y^j) = q^j y^j, delta = Jackson q-derivative.
// TRUNCQ(m):    Q[y]/(y^m), sigma = id, delta = d/dy, q = 1.
// NILQ(p,m,q):  y*F_p[y]/(y^m) (non-unital), sigma(y^j) = q^j y^j,
//               delta(y^j) = [j]_q y^{j+1}; the skew scalar of this context
//               is q^{-1} since here delta.sigma = q^{-1} sigma.delta.
//
// delta descends from k[y] to the truncation as a genuine sigma-derivation
// only when [m]_q = 0 in the field; instances violating that are still
// constructible (the boundary failure is precisely what check_context
// reports), e.g. QP:5,3,2 and TRUNCQ:4.
enum class RingFamily { qp, truncq, nilq };

struct RingSpec {
    RingFamily family;
    std::uint64_t p = 0;
    std::size_t m = 0;
    std::uint64_t q = 0;

    static RingSpec parse(std::string_view text);  // "QP:5,3,2", "TRUNCQ:4", "NILQ:5,4,2"
    std::string to_string() const;
    ContextPtr make(SearchCaps caps = {}) const;
};

ContextPtr make_qp(std::uint64_t p, std::size_t m, std::uint64_t q, SearchCaps caps = {});
ContextPtr make_truncq(std::size_t m, SearchCaps caps = {});
ContextPtr make_nilq(std::uint64_t p, std::size_t m, std::uint64_t q, SearchCaps caps = {});

// ---- operations -----------------------------------------------------------

// sigma^k(a); negative k goes through the inverse.
AlgebraElement sigma_apply(const OreContext& ctx, const AlgebraElement& a, long k);
// delta^k(a), k >= 0.
AlgebraElement delta_apply(const OreContext& ctx, const AlgebraElement& a, std::size_t k);

// Least N with delta^N(a) = 0; nildeg(0) = 0. CapExceeded past the search cap.
std::size_t nildeg(const OreContext& ctx, const AlgebraElement& a);
// Least m >= 1 with sigma^m(a) = a. CapExceeded past the search cap.
std::size_t tordeg(const OreContext& ctx, const AlgebraElement& a);

struct AxiomCheck {
    std::string axiom;  // "sigma_multiplicative" | "delta_leibniz" | "qskew_commutation"
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> witnesses;  // failing inputs with both sides
};

struct ContextReport {
    std::vector<AxiomCheck> checks;
    std::size_t trials = 0;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

// Verifies, exactly: sigma multiplicative on all basis pairs plus `trials`
// random pairs, the twisted Leibniz rule delta(ab) = sigma(a)delta(b) +
// delta(a)b on the same pairs, and q*sigma.delta = delta.sigma as matrices.
ContextReport check_context(const OreContext& ctx, std::size_t trials, std::uint64_t seed);

// Random elements with coordinates drawn uniformly from the field (bounded
// numerators/denominators over Q).
Scalar random_scalar(Rng& rng, const FieldSpec& fs);
Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& fs);
AlgebraElement random_element(Rng& rng, const AlgebraPtr& alg);
AlgebraElement random_nonzero_element(Rng& rng, const AlgebraPtr& alg);

}  // namespace ore
