#include "ore/qbinom.hpp"

#include <atomic>
#include <mutex>
#include <sstream>

namespace ore {

namespace {

// Adds t^shift * src into dst, growing dst as needed.
void add_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src, std::size_t shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
    for (std::size_t k = 0; k < src.size(); ++k) dst[k + shift] += src[k];
}

std::vector<std::vector<mpz_class>> next_row(const std::vector<std::vector<mpz_class>>& prev) {
    std::size_t n = prev.size();  // prev holds row n-1 (entries 0..n-1)
    std::vector<std::vector<mpz_class>> row(n + 1);
    row[0] = {mpz_class(1)};
    row[n] = {mpz_class(1)};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<mpz_class> c = prev[i - 1];
        add_shifted(c, prev[i], i);
        row[i] = std::move(c);
    }
    return row;
}

struct Triangle {
    std::mutex mu;
    std::vector<std::vector<std::vector<mpz_class>>> rows;  // rows[n][i] = coefficient list

    std::vector<mpz_class> get(long n, long i) {
        std::lock_guard<std::mutex> lock(mu);
        if (rows.empty()) rows.push_back({{mpz_class(1)}});
        while (static_cast<long>(rows.size()) <= n) rows.push_back(next_row(rows.back()));
        return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
};

Triangle& triangle() {
    static Triangle t;
    return t;
}

std::vector<mpz_class> compute_row_uncached(long n, long i) {
    std::vector<std::vector<mpz_class>> row = {{mpz_class(1)}};
    for (long k = 1; k <= n; ++k) row = next_row(row);
    return row[static_cast<std::size_t>(i)];
}

std::atomic<long> memo_cap{64};

}  // namespace

long qbinom_memo_cap() { return memo_cap.load(); }

void set_qbinom_memo_cap(long cap) { memo_cap.store(cap < 0 ? 0 : cap); }

Scalar GaussPolynomial::eval(const Scalar& q) const {
    const FieldSpec& fs = q.field();
    Scalar acc = Scalar::zero(fs);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * q + Scalar::from_fraction(*it, 1, fs);
    return acc;
}

std::string GaussPolynomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << coeffs[k].get_str();
        } else {
            if (coeffs[k] != 1) out << coeffs[k].get_str() << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

GaussPolynomial gauss_binom(long n, long i) {
    if (n < 0 || i < 0 || i > n)
        fail(errc::index_out_of_range,
             "gauss_binom(" + std::to_string(n) + "," + std::to_string(i) + ")");
    GaussPolynomial g;
    g.n = n;
    g.i = i;
    g.coeffs = n <= qbinom_memo_cap() ? triangle().get(n, i) : compute_row_uncached(n, i);
    return g;
}

Scalar qbinom_eval(long n, long i, const Scalar& q) {
    if (q.is_zero()) fail(errc::zero_q, "qbinom_eval at q = 0");
    return gauss_binom(n, i).eval(q);
}

}  // namespace ore
