#include "zcx/series.hpp"

#include <algorithm>

namespace zcx {

Series::Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order);
}

Series Series::constant(std::size_t order, const Rational& c)
{
    Series s(order);
    if (order) s.coeffs_[0] = c;
    return s;
}

Series Series::polynomial(std::size_t order, std::initializer_list<Rational> coeffs)
{
    return Series(order, std::vector<Rational>(coeffs));
}

Series Series::monomial(std::size_t order, std::size_t power, const Rational& c)
{
    Series s(order);
    if (power < order) s.coeffs_[power] = c;
    return s;
}

Series Series::binomial(std::size_t order, const Rational& a, const Rational& beta)
{
    Series s(order);
    if (!order) return s;
    s.coeffs_[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        const Rational k(static_cast<long>(n));
        s.coeffs_[n] = s.coeffs_[n - 1] * (beta - k + 1) * a / k;
    }
    return s;
}

const Rational& Series::coefficient(std::size_t n) const
{
    if (n >= coeffs_.size())
        throw SeriesException(SeriesError::OutOfRange,
                              "coefficient " + std::to_string(n) + " beyond order " + std::to_string(coeffs_.size()));
    return coeffs_[n];
}

std::size_t Series::valuation() const
{
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (sgn(coeffs_[n]) != 0) return n;
    return coeffs_.size();
}

std::size_t Series::support_end() const
{
    for (std::size_t n = coeffs_.size(); n > 0; --n)
        if (sgn(coeffs_[n - 1]) != 0) return n;
    return 0;
}

Series Series::truncated(std::size_t order) const
{
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, coeffs_.size())));
    return Series(order, std::move(c));
}

Series Series::shift(std::size_t k) const
{
    Series s(order());
    for (std::size_t n = 0; n + k < order(); ++n) s.coeffs_[n + k] = coeffs_[n];
    return s;
}

Series Series::shift_down(std::size_t k) const
{
    if (k > order()) throw SeriesException(SeriesError::NotDivisible, "shift_down beyond order");
    for (std::size_t n = 0; n < k; ++n)
        if (sgn(coeffs_[n]) != 0)
            throw SeriesException(SeriesError::NotDivisible,
                                  "coefficient " + std::to_string(n) + " is nonzero; cannot divide by t^" + std::to_string(k));
    Series s(order() - k);
    for (std::size_t n = k; n < order(); ++n) s.coeffs_[n - k] = coeffs_[n];
    return s;
}

Series Series::operator-() const
{
    Series s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& o)
{
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

Series& Series::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series& Series::operator/=(const Rational& c)
{
    if (sgn(c) == 0) throw SeriesException(SeriesError::NonUnitDivisor, "division of a series by zero");
    for (auto& x : coeffs_) x /= c;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    Series s(order);
    const std::size_t b_end = b.support_end();
    Rational term;
    for (std::size_t i = 0; i < order; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        const std::size_t j_end = std::min(order - i, b_end);
        for (std::size_t j = 0; j < j_end; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            term = a.coeffs_[i] * b.coeffs_[j];
            s.coeffs_[i + j] += term;
        }
    }
    return s;
}

Series div(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    if (order == 0) return Series(0);
    if (sgn(b[0]) == 0) throw SeriesException(SeriesError::NonUnitDivisor, "divisor has zero constant term");
    const std::size_t b_end = b.support_end();
    std::vector<Rational> q(order);
    Rational acc;
    for (std::size_t n = 0; n < order; ++n) {
        acc = a[n];
        const std::size_t k_end = std::min(n + 1, b_end);
        for (std::size_t k = 1; k < k_end; ++k) {
            if (sgn(b[k]) == 0 || sgn(q[n - k]) == 0) continue;
            acc -= b[k] * q[n - k];
        }
        q[n] = acc / b[0];
    }
    return Series(order, std::move(q));
}

Series operator/(const Series& a, const Series& b) { return div(a, b); }

Series inverse(const Series& b) { return div(Series::constant(b.order(), 1), b); }

Series div_cancel(const Series& a, const Series& b)
{
    const std::size_t v = b.valuation();
    if (v == b.order()) throw SeriesException(SeriesError::NonUnitDivisor, "divisor is zero to its order");
    if (v == 0) return div(a, b);
    return div(a.shift_down(v), b.shift_down(v));
}

Series sqrt(const Series& a)
{
    const std::size_t order = a.order();
    if (order == 0) return Series(0);
    if (a[0] != 1) throw SeriesException(SeriesError::BadConstantTerm, "sqrt needs constant term 1");
    Series s = Series::constant(1, 1);
    std::size_t precision = 1;
    while (precision < order) {
        precision = std::min(2 * precision, order);
        const Series target = a.truncated(precision);
        const Series current = s.truncated(precision);
        s = (current + div(target, current)) / Rational(2);
    }
    return s;
}

long first_difference(const Series& a, const Series& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    for (std::size_t n = 0; n < order; ++n)
        if (a[n] != b[n]) return static_cast<long>(n);
    return -1;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace zcx
