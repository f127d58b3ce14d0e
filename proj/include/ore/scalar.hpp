#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ore/error.hpp"

namespace ore {

enum class FieldKind { rationals, prime_field };

// Coefficient field description: the rationals, or a prime field F_p.
// Moduli are restricted to p < 2^31 so residue arithmetic stays in builtin
// integers; rationals carry arbitrary-precision payloads.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;  // modulus, meaningful only for prime_field

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);  // validates primality and range

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;                 // "QQ" or "F5"
    static FieldSpec parse(std::string_view src);  // accepts "Q", "QQ", "F5", "fp:5"
};

// An element of the coefficient field, always in canonical form: reduced
// fraction over the rationals, residue in [0, p) over a prime field.
class Scalar {
public:
    Scalar() : spec_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& fs) { return from_int(0, fs); }
    static Scalar one(const FieldSpec& fs) { return from_int(1, fs); }
    static Scalar from_int(long v, const FieldSpec& fs);
    static Scalar from_mpq(const mpq_class& v, const FieldSpec& fs);
    static Scalar from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& fs);

    // Text form round-trips exactly: "a/b" for rationals (no "/1"), decimal
    // residue for prime fields.
    std::string to_string() const;
    static Scalar parse(std::string_view text, const FieldSpec& fs);

    const FieldSpec& field() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero on zero divisor
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(long e) const;  // negative exponents via inverse

    // Rational payload (rationals only).
    const mpq_class& rational() const { return rat_; }
    // Residue payload (prime fields only).
    std::uint64_t residue() const { return res_; }

private:
    void require_same_field(const Scalar& o) const;

    FieldSpec spec_;
    mpq_class rat_;            // active when kind == rationals
    std::uint64_t res_ = 0;    // active when kind == prime_field
};

// Multiplicative order of q: least r >= 1 with q^r = 1, or nullopt when no
// such r exists (rationals with q outside {1,-1}). ZeroInput when q = 0.
std::optional<std::uint64_t> mult_order(const Scalar& q);

}  // namespace ore
