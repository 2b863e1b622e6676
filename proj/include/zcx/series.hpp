#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in t with exact rational coefficients.
 *
 * A Series of order N stores the coefficients of t^0 .. t^(N-1). Binary
 * operations truncate to the smaller order of their operands. Nothing here
 * uses floating point.
 *
 * Products and quotients skip zero coefficients, so multiplying or dividing
 * by a polynomial of degree d costs O(N d) rather than O(N^2).
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zcx {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class SeriesError {
    NonUnitDivisor,     // divisor has a zero constant term
    BadConstantTerm,    // sqrt of a series whose constant term is not 1
    NotDivisible,       // shift_down would discard a nonzero coefficient
    OutOfRange,         // coefficient index beyond the truncation order
};

class SeriesException : public std::runtime_error {
public:
    SeriesException(SeriesError code, const std::string& what) : std::runtime_error(what), code_(code) {}
    SeriesError code() const noexcept { return code_; }

private:
    SeriesError code_;
};

class Series {
public:
    explicit Series(std::size_t order = 0) : coeffs_(order) {}
    Series(std::size_t order, std::vector<Rational> coeffs);

    static Series constant(std::size_t order, const Rational& c);
    /// c0 + c1 t + c2 t^2 + ... truncated to order.
    static Series polynomial(std::size_t order, std::initializer_list<Rational> coeffs);
    static Series monomial(std::size_t order, std::size_t power, const Rational& c = 1);
    /// (1 + a t)^beta via the ratio recurrence c_n = c_{n-1} (beta - n + 1) a / n.
    static Series binomial(std::size_t order, const Rational& a, const Rational& beta);

    std::size_t order() const { return coeffs_.size(); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Throws SeriesException(OutOfRange) past the truncation order.
    const Rational& coefficient(std::size_t n) const;
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Index of the first nonzero coefficient, or order() if all are zero.
    std::size_t valuation() const;
    bool is_zero() const { return valuation() == order(); }
    Series truncated(std::size_t order) const;

    /// Multiplies by t^k (order kept).
    Series shift(std::size_t k) const;
    /// Divides by t^k; the first k coefficients must vanish. Order drops by k.
    Series shift_down(std::size_t k) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& c);
    Series& operator/=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator/(Series a, const Rational& c) { return a /= c; }
    friend Series operator/(const Series& a, const Series& b);

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    /// Nonzero-pattern helper: index of the last nonzero coefficient + 1.
    std::size_t support_end() const;

private:
    std::vector<Rational> coeffs_;
};

/// a / b; b must have a nonzero constant term (SeriesError::NonUnitDivisor).
Series div(const Series& a, const Series& b);
Series inverse(const Series& b);

/// Quotient after cancelling the common power of t: b = t^v b', a = t^v a'.
/// The result has order min(order) - v.
Series div_cancel(const Series& a, const Series& b);

/// Square root with constant term 1, by Newton iteration s <- (s + a/s)/2
/// doubling the number of correct terms per step, seeded at 1.
Series sqrt(const Series& a);

/// First index n < order where a and b differ, or -1 when they agree.
long first_difference(const Series& a, const Series& b);

std::string to_string(const Rational& q);

}  // namespace zcx
