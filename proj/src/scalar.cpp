#include "ore/scalar.hpp"

#include <cctype>
#include <sstream>

namespace ore {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so a*b < 2^62
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

// Extended Euclid; q nonzero, p prime.
std::uint64_t mod_inv(std::uint64_t q, std::uint64_t p) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(q % p);
    while (newr != 0) {
        long long quot = r / newr;
        long long tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ull << 31)) fail(errc::invalid_ring_spec, "prime modulus too large (need p < 2^31)");
    if (!is_prime_u64(p)) fail(errc::invalid_ring_spec, "modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::to_string() const {
    if (kind == FieldKind::rationals) return "QQ";
    return "F" + std::to_string(p);
}

FieldSpec FieldSpec::parse(std::string_view src) {
    if (src == "Q" || src == "QQ" || src == "q" || src == "qq" || src == "rationals")
        return rationals();
    std::string_view digits;
    if (!src.empty() && (src[0] == 'F' || src[0] == 'f')) {
        digits = src.substr(1);
        if (!digits.empty() && digits[0] == 'p' && digits.size() > 2 && digits[1] == ':')
            digits = digits.substr(2);  // "fp:5"
    }
    if (digits.empty()) fail(errc::invalid_ring_spec, "unrecognized field \"" + std::string(src) + "\"");
    std::uint64_t p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(errc::invalid_ring_spec, "unrecognized field \"" + std::string(src) + "\"");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= (1ull << 31)) fail(errc::invalid_ring_spec, "prime modulus too large (need p < 2^31)");
    }
    return prime(p);
}

Scalar Scalar::from_int(long v, const FieldSpec& fs) {
    Scalar s;
    s.spec_ = fs;
    if (fs.kind == FieldKind::rationals) {
        s.rat_ = mpq_class(v);
    } else {
        long long r = v % static_cast<long long>(fs.p);
        if (r < 0) r += static_cast<long long>(fs.p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& v, const FieldSpec& fs) {
    return from_fraction(v.get_num(), v.get_den(), fs);
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& fs) {
    if (den == 0) fail(errc::division_by_zero, "zero denominator");
    Scalar s;
    s.spec_ = fs;
    if (fs.kind == FieldKind::rationals) {
        s.rat_ = mpq_class(num, den);
        s.rat_.canonicalize();
    } else {
        std::uint64_t n = reduce_mpz(num, fs.p);
        std::uint64_t d = reduce_mpz(den, fs.p);
        if (d == 0) fail(errc::division_by_zero, "denominator vanishes in F" + std::to_string(fs.p));
        s.res_ = mod_mul(n, mod_inv(d, fs.p), fs.p);
    }
    return s;
}

std::string Scalar::to_string() const {
    if (spec_.kind == FieldKind::rationals) return rat_.get_str();
    return std::to_string(res_);
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& fs) {
    std::string t(text);
    std::size_t i = 0;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        neg = (t[i] == '-');
        ++i;
    }
    std::size_t digits_start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == digits_start) fail(errc::syntax_error, "malformed scalar \"" + t + "\"");
    mpz_class num(t.substr(digits_start, i - digits_start));
    mpz_class den(1);
    if (i < t.size() && t[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == den_start) fail(errc::syntax_error, "malformed scalar \"" + t + "\"");
        den = mpz_class(t.substr(den_start, i - den_start));
    }
    if (i != t.size()) fail(errc::syntax_error, "malformed scalar \"" + t + "\"");
    if (neg) num = -num;
    return from_fraction(num, den, fs);
}

bool Scalar::is_zero() const {
    return spec_.kind == FieldKind::rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return spec_.kind == FieldKind::rationals ? rat_ == 1 : res_ == 1 % spec_.p;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (spec_ != o.spec_)
        fail(errc::mixed_fields, spec_.to_string() + " vs " + o.spec_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.spec_ = spec_;
    if (spec_.kind == FieldKind::rationals)
        s.rat_ = rat_ + o.rat_;
    else
        s.res_ = (res_ + o.res_) % spec_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.spec_ = spec_;
    if (spec_.kind == FieldKind::rationals)
        s.rat_ = rat_ - o.rat_;
    else
        s.res_ = (res_ + spec_.p - o.res_) % spec_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar s;
    s.spec_ = spec_;
    if (spec_.kind == FieldKind::rationals)
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = mod_mul(res_, o.res_, spec_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.spec_ = spec_;
    if (spec_.kind == FieldKind::rationals)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : spec_.p - res_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (spec_ != o.spec_) return false;
    return spec_.kind == FieldKind::rationals ? rat_ == o.rat_ : res_ == o.res_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    Scalar s;
    s.spec_ = spec_;
    if (spec_.kind == FieldKind::rationals)
        s.rat_ = 1 / rat_;
    else
        s.res_ = mod_inv(res_, spec_.p);
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(spec_);
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<std::uint64_t> mult_order(const Scalar& q) {
    if (q.is_zero()) fail(errc::zero_input, "mult_order of zero");
    const FieldSpec& fs = q.field();
    if (fs.kind == FieldKind::rationals) {
        if (q.rational() == 1) return 1;
        if (q.rational() == -1) return 2;
        return std::nullopt;
    }
    // Order divides p-1: strip prime factors of p-1 while q^(d/f) stays 1.
    std::uint64_t d = fs.p - 1;
    std::uint64_t n = d;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        while (n % f == 0) n /= f;
        while (d % f == 0 && mod_pow(q.residue(), d / f, fs.p) == 1) d /= f;
    }
    if (n > 1)
        while (d % n == 0 && mod_pow(q.residue(), d / n, fs.p) == 1) d /= n;
    return d;
}

}  // namespace ore
