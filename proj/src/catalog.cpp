#include "zcx/catalog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace zcx {

namespace {

Rational Q(long num, long den = 1)
{
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

// Extra working terms so that cancelling a power of t never eats into the
// requested order.
constexpr std::size_t kPad = 4;

/// Term factory at a fixed working order.
struct Terms {
    std::size_t n;

    Series poly(std::initializer_list<Rational> c) const { return Series::polynomial(n, c); }
    Series one() const { return Series::constant(n, 1); }
    Series t(std::size_t k, const Rational& c = 1) const { return Series::monomial(n, k, c); }
    /// (1 - 4t)^(half_steps / 2)
    Series root(long half_steps) const { return Series::binomial(n, -4, Q(half_steps, 2)); }
};

constexpr std::array<std::pair<GfName, std::string_view>, 24> kNames{{
    {GfName::L, "L"},       {GfName::E, "E"},         {GfName::Z, "Z"},       {GfName::S4, "S4"},
    {GfName::C, "C"},       {GfName::D, "d"},         {GfName::H, "H"},       {GfName::Rect, "Rect"},
    {GfName::A, "A"},       {GfName::C22, "C22"},     {GfName::C21, "C21"},   {GfName::C0p, "C0p"},
    {GfName::L0p, "L0p"},   {GfName::S0p, "S0p"},     {GfName::Sp, "Sp"},     {GfName::Cp, "Cp"},
    {GfName::Lp, "Lp"},     {GfName::Np, "Np"},       {GfName::S111, "S111"}, {GfName::R1, "R1"},
    {GfName::C1at1, "C1at1"}, {GfName::C111, "C111"}, {GfName::L111, "L111"}, {GfName::N1, "N1"},
}};

// ---- univariate closed forms ----

Series l_convex(const Terms& T)
{
    return T.poly({0, 0, 1, -2, 1}) / T.poly({1, -4, 2});
}

Series centered(const Terms& T)
{
    return T.poly({0, 0, 1}) * T.poly({1, -1}) * T.poly({1, -3}) / T.poly({1, -2}) / T.poly({1, -4});
}

Series catalan_d(const Terms& T)
{
    return (T.poly({1, -2}) - T.root(1)) / Q(2);
}

Series z_convex(const Terms& T)
{
    const Series algebraic =
        T.t(4, 2) * T.poly({1, -4, 4}) * catalan_d(T) / T.poly({1, -8, 16}) / T.poly({1, -3}) / T.poly({1, -1});
    const Series rational =
        T.poly({0, 0, 1, -6, 10, -2, -1}) / T.poly({1, -4}) / T.poly({1, -3}) / T.poly({1, -1});
    return algebraic + rational;
}

Series four_stack(const Terms& T)
{
    return T.poly({0, 0, 1, -6, 9}) * T.root(-3) / T.poly({1, -2});
}

Series convex(const Terms& T)
{
    return T.poly({0, 0, 1, -6, 11, -4}) / T.poly({1, -8, 16}) - T.t(4, 4) * T.root(-3);
}

Series centered_ascending(const Terms& T)
{
    const Series half_t_one_minus_t = T.poly({0, 1, -1}) / Q(2);
    return half_t_one_minus_t * T.root(-1) - half_t_one_minus_t;
}

Series rectangular(const Terms& T)
{
    return T.t(2) * T.root(-1);
}

Series ascending(const Terms& T)
{
    const Series rational = T.poly({0, 0, 2, -12, 19, -4}) / T.poly({1, -8, 16}) / Q(2);
    const Series algebraic = T.poly({0, 0, 0, 0, 5, -8}) * T.root(-3) / T.poly({1, -2}) / Q(2);
    return rational - algebraic;
}

Series c22(const Terms& T)
{
    return T.t(4) * T.root(-3) / T.poly({1, -2}) - T.t(4) / T.poly({1, -4}) / T.poly({1, -4, 2});
}

Series c21(const Terms& T)
{
    const Series first = T.poly({0, 0, 0, 0, -2, 10, -15, 8}) * T.root(-3) / T.poly({1, -1}) / T.poly({1, -3}) /
                         T.poly({1, -2}) / Q(2);
    const Series second = T.poly({0, 0, 0, 0, -2, 14, -25, 4, -6, 8}) / T.poly({1, -4, 2}) /
                          T.poly({1, -8, 16}) / T.poly({1, -3}) / T.poly({1, -1}) / Q(2);
    return first - second;
}

// ---- rectangular classes ----

// 1 - t - 2ty + t^2 y^2
Series stack_kernel(const Terms& T, const Rational& y)
{
    return T.poly({1, -1 - 2 * y, y * y});
}

// 1 - 3t + t^2 - 2tz + 4t^2 z + t^2 z^2 - t^3 z^2
Series column_kernel(const Terms& T, const Rational& z)
{
    return T.poly({1, -3 - 2 * z, 1 + 4 * z + z * z, -z * z});
}

Series c0_rect(const Terms& T, const Rational& x, const Rational& y)
{
    return T.t(3, x * x * y) * T.poly({1, -1}) * T.poly({1, -y}) / T.poly({1, -x}) / stack_kernel(T, y);
}

Series l0_rect(const Terms& T, const Rational& x, const Rational& y)
{
    return T.t(2, x * y) * T.poly({1, -y - 1}) / stack_kernel(T, y);
}

Series s0_rect(const Terms& T, const Rational& x, const Rational& y)
{
    return T.t(4, x * y * y) / stack_kernel(T, y);
}

Series s_rect(const Terms& T, const Rational& x, const Rational& y, const Rational& z)
{
    return T.t(5, x * y * z) * T.poly({1, -1 - z, -y + z}) / stack_kernel(T, y) / column_kernel(T, z);
}

Series c_rect(const Terms& T, const Rational& x, const Rational& y, const Rational& z)
{
    return T.t(5, x * x * y * z) * T.poly({1, -1}) * T.poly({1, -y - z, y - z + y * z}) / T.poly({1, -x}) /
           stack_kernel(T, y) / column_kernel(T, z);
}

Series l_rect(const Terms& T, const Rational& x, const Rational& y, const Rational& z)
{
    return T.t(4, x * y * z) * T.poly({1, -2 - y - z, 1 + 2 * y + z + y * z, -y * z}) / stack_kernel(T, y) /
           column_kernel(T, z);
}

// The kernel 1 - z + t z^2 loses its constant term at z = 1; div_cancel
// removes the common factor t in that case.
Series nc_rect(const Terms& T, const Rational& z)
{
    const Series kernel = T.poly({1 - z, z * z});
    const Series first = div_cancel(T.t(3, z) * T.root(-1), kernel);
    const Series second =
        div_cancel(T.t(3, z) * T.poly({1, -z}) * T.poly({1, -1 - z}), kernel * column_kernel(T, z));
    return first - second;
}

// ---- non-rectangular classes at (1,1,1) ----

Series s111(const Terms& T)
{
    const Series cubic = T.poly({1, -5, 6, -1});
    return T.poly({0, 1, -5, 6, -1}) * T.root(-1) / T.poly({1, -2}) / Q(2) -
           T.poly({0, 1, -8, 23, -28, 14, -4, 1}) / T.poly({1, -2}) / cubic / Q(2);
}

Series r1(const Terms& T)
{
    const Series p = T.poly({0, 0, 0, 1, -1});
    return p * T.root(-1) / T.poly({1, -2}) / Q(2) - p / T.poly({1, -2}) / Q(2);
}

Series c1_at1(const Terms& T)
{
    return T.t(4) * T.root(-1) / T.poly({1, -2}) / Q(2) - T.t(4) / T.poly({1, -2}) / Q(2);
}

Series c111(const Terms& T)
{
    const Series cubic = T.poly({1, -5, 6, -1});
    return T.poly({0, 0, 1, -3, 1}) * T.root(-1) / T.poly({1, -2}) / Q(2) -
           T.poly({0, 0, 1, -6, 12, -8, 1, -1}) / T.poly({1, -2}) / cubic / Q(2);
}

Series l111(const Terms& T)
{
    const Series cubic = T.poly({1, -5, 6, -1});
    return T.t(2) * T.root(-1) / Q(2) - T.poly({0, 0, 1, -3, 2, -1}) / cubic / Q(2);
}

Series n1(const Terms& T)
{
    const Series cubic = T.poly({1, -5, 6, -1});
    return T.poly({0, 1, -10, 31, -16, -68, 90, -27, 4}) / T.poly({1, -8, 16}) / cubic / Q(2) -
           T.poly({0, 1, -5, 2, 13, -8}) * T.root(-3) / T.poly({1, -2}) / Q(2);
}

const Rational& need(const std::optional<Rational>& v, char which, GfName name)
{
    if (!v)
        throw CatalogException(CatalogError::MissingParam,
                               std::string(name_of(name)) + " needs parameter " + std::string(1, which));
    return *v;
}

}  // namespace

std::string_view name_of(GfName g)
{
    for (const auto& [k, v] : kNames)
        if (k == g) return v;
    return "?";
}

std::optional<GfName> parse_gf_name(std::string_view s)
{
    for (const auto& [k, v] : kNames)
        if (v == s) return k;
    return std::nullopt;
}

std::vector<GfName> all_gf_names()
{
    std::vector<GfName> out;
    for (const auto& kv : kNames) out.push_back(kv.first);
    return out;
}

std::string_view required_params(GfName g)
{
    switch (g) {
    case GfName::C0p:
    case GfName::L0p:
    case GfName::S0p: return "xy";
    case GfName::Sp:
    case GfName::Cp:
    case GfName::Lp: return "xyz";
    case GfName::Np: return "z";
    default: return "";
    }
}

bool is_scalar(GfName g)
{
    switch (g) {
    case GfName::S111:
    case GfName::R1:
    case GfName::C1at1:
    case GfName::C111:
    case GfName::L111:
    case GfName::N1: return true;
    default: return false;
    }
}

Series gf(GfName name, std::size_t terms, const GfParams& params)
{
    const Terms T{terms + kPad};
    auto x = [&] { return need(params.x, 'x', name); };
    auto y = [&] { return need(params.y, 'y', name); };
    auto z = [&] { return need(params.z, 'z', name); };
    Series s;
    switch (name) {
    case GfName::L: s = l_convex(T); break;
    case GfName::E: s = centered(T); break;
    case GfName::Z: s = z_convex(T); break;
    case GfName::S4: s = four_stack(T); break;
    case GfName::C: s = convex(T); break;
    case GfName::D: s = catalan_d(T); break;
    case GfName::H: s = centered_ascending(T); break;
    case GfName::Rect: s = rectangular(T); break;
    case GfName::A: s = ascending(T); break;
    case GfName::C22: s = c22(T); break;
    case GfName::C21: s = c21(T); break;
    case GfName::C0p: s = c0_rect(T, x(), y()); break;
    case GfName::L0p: s = l0_rect(T, x(), y()); break;
    case GfName::S0p: s = s0_rect(T, x(), y()); break;
    case GfName::Sp: s = s_rect(T, x(), y(), z()); break;
    case GfName::Cp: s = c_rect(T, x(), y(), z()); break;
    case GfName::Lp: s = l_rect(T, x(), y(), z()); break;
    case GfName::Np: s = nc_rect(T, z()); break;
    case GfName::S111: s = s111(T); break;
    case GfName::R1: s = r1(T); break;
    case GfName::C1at1: s = c1_at1(T); break;
    case GfName::C111: s = c111(T); break;
    case GfName::L111: s = l111(T); break;
    case GfName::N1: s = n1(T); break;
    }
    return s.truncated(terms);
}

Series scalar_gf(GfName name, std::size_t terms)
{
    if (!is_scalar(name))
        throw CatalogException(CatalogError::NotScalar, std::string(name_of(name)) + " is not a scalar evaluation");
    return gf(name, terms);
}

BigInt h_formula(int n)
{
    if (n < 2) throw std::invalid_argument("h_formula needs n >= 2");
    if (n == 2) return 1;
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n - 5), static_cast<unsigned long>(n - 2));
    BigInt num = BigInt(3 * n - 5) * binom;
    return num / (n - 1);
}

BigInt rect_formula(int n)
{
    if (n < 2) throw std::invalid_argument("rect_formula needs n >= 2");
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n - 4), static_cast<unsigned long>(n - 2));
    return binom;
}

std::vector<IdentityCheck> kernel_checks(std::size_t terms)
{
    std::vector<IdentityCheck> out;
    auto record = [&](std::string name, const Series& lhs, const Series& rhs) {
        const long diff = first_difference(lhs, rhs);
        out.push_back({std::move(name), diff < 0, diff});
    };

    const Terms T{terms + kPad};

    // z0 = (1 - sqrt(1-4t)) / (2t) is the power-series root of 1 - z + t z^2.
    const Series z0 = (T.one() - T.root(1)).shift_down(1) / Q(2);
    const Terms Tz{z0.order()};
    const Series nc_kernel = Tz.one() - z0 + Tz.t(1) * z0 * z0;
    record("z-kernel root: 1 - z0 + t z0^2 = 0", nc_kernel.truncated(terms), Series(terms));

    // t z0 = d(t) + t
    const Series lhs = (Tz.t(1) * z0).truncated(terms);
    const Series rhs = (catalan_d(T) + T.t(1)).truncated(terms);
    record("t z0 = d(t) + t", lhs, rhs);

    // y = 1/(1 - t z) cancels 1 - y + t y z at a sample z.
    const Rational zs = Q(5, 7);
    const Series y0 = inverse(T.poly({1, -zs}));
    record("y-kernel root at z = 5/7: 1 - y0 + t z y0 = 0",
           (T.one() - y0 + T.t(1, zs) * y0).truncated(terms), Series(terms));

    // Puiseux roots Z+- = (1 +- s)/(1 - s^2), s = sqrt(t), of (1 - Z)^2 - s^2 Z^2.
    for (const int sign : {+1, -1}) {
        const std::string tag = sign > 0 ? "Z+" : "Z-";
        const Series zpm = T.poly({1, Q(sign)}) / T.poly({1, 0, -1});
        const Series one_minus = T.one() - zpm;
        record(tag + " kernel as series in s", (one_minus * one_minus - T.t(2) * zpm * zpm).truncated(terms),
               Series(terms));

        // Clearing the denominator (1 - s^2)^2 leaves a degree-4 polynomial,
        // so a short exact expansion settles the rational identity.
        const std::size_t exact = 8;
        const Series num = Series::polynomial(exact, {1, Q(sign)});
        const Series den = Series::polynomial(exact, {1, 0, -1});
        const Series diff = den - num;
        const Series poly = diff * diff - Series::monomial(exact, 2) * num * num;
        record(tag + " kernel as rational identity", poly, Series(exact));

        // 1 +- s + s^2 +- s^3 + ...
        Series expected(terms);
        std::vector<Rational> c(terms);
        for (std::size_t k = 0; k < terms; ++k) c[k] = (sign < 0 && k % 2 == 1) ? Q(-1) : Q(1);
        record(tag + " expansion 1 +- s + s^2 +- ...", zpm.truncated(terms), Series(terms, std::move(c)));
    }
    return out;
}

std::vector<IdentityCheck> functional_equation_checks(const Rational& x, const Rational& y, const Rational& z,
                                                      std::size_t terms)
{
    if (y == 1 || z == 1)
        throw CatalogException(CatalogError::DegenerateParam,
                               "functional equations divide by 1 - y and 1 - z; both must differ from 1");
    const Terms T{terms + kPad};
    const Rational one = 1;
    std::vector<IdentityCheck> out;
    auto record = [&](std::string name, const Series& lhs, const Series& rhs) {
        const long diff = first_difference(lhs.truncated(terms), rhs.truncated(terms));
        out.push_back({std::move(name), diff < 0, diff});
    };

    const Series C0 = c0_rect(T, x, y);
    const Series L0 = l0_rect(T, x, y);
    const Series S0 = s0_rect(T, x, y);
    const Series C0_1y = c0_rect(T, one, y);

    record("C'0: C'0 = tx C'0 + tx L'0 + tx S'0", C0, T.t(1, x) * (C0 + L0 + S0));
    record("L'0: L'0 = t^2 xy + txy C'0(1,y) + ty L'0 + ty S'0", L0,
           T.t(2, x * y) + T.t(1, x * y) * C0_1y + T.t(1, y) * (L0 + S0));
    record("S'0: S'0 = txy C'0(1,y) + ty S'0", S0, T.t(1, x * y) * C0_1y + T.t(1, y) * S0);

    const Series Cr = c_rect(T, x, y, z);
    const Series Lr = l_rect(T, x, y, z);
    const Series Sr = s_rect(T, x, y, z);
    record("C': C' = tx C' + tx L' + tx S'", Cr, T.t(1, x) * (Cr + Lr + Sr));

    const Series l_rhs = T.t(1, x * y) * c_rect(T, one, y, z) +
                         T.t(1, x * y / (1 - z)) * (z * c_rect(T, one, one, z) - c_rect(T, z, one, z)) +
                         T.t(1, x * y / (1 - z)) * (z * c0_rect(T, one, one) - c0_rect(T, z, one)) +
                         T.t(1, y) * (Lr + Sr);
    record("L': L' = txy C'(1,y,z) + txy/(1-z)[z C'(1,1,z) - C'(z,1,z)] + txy/(1-z)[z C'0(1,1) - C'0(z,1)] + ty L' + ty S'",
           Lr, l_rhs);

    const Series s_rhs = T.t(1, z / (1 - y)) * (y * s0_rect(T, x, one) - S0) +
                         T.t(1, y * z / (1 - y)) * (s_rect(T, x, one, z) - Sr);
    record("S': S' = tz/(1-y)[y S'0(x,1) - S'0(x,y)] + tyz/(1-y)[S'(x,1,z) - S'(x,y,z)]", Sr, s_rhs);

    const Series N = nc_rect(T, z);
    const Series N1 = nc_rect(T, one);
    const Series factor = T.t(1, z / (1 - z));
    const Series n_rhs = factor * (c_rect(T, one, one, one) - c_rect(T, one, one, z)) +
                         factor * (l_rect(T, one, one, one) - l_rect(T, one, one, z)) +
                         factor * (s_rect(T, one, one, one) - s_rect(T, one, one, z)) + factor * (N1 - z * N);
    record("N': N' = tz/(1-z)[C'(1,1,1) - C'(1,1,z)] + ... + tz/(1-z)[N'(1) - z N'(z)]", N, n_rhs);
    return out;
}

std::vector<AsymptoticCheck> asymptotic_checks(int n)
{
    const auto terms = static_cast<std::size_t>(2 * n + 1);
    const Terms T{terms};
    BigInt four_n, four_2n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    mpz_ui_pow_ui(four_2n.get_mpz_t(), 4, static_cast<unsigned long>(2 * n));

    struct Law {
        std::string name;
        std::string law;
        Series series;
        Rational inverse_constant;  // 1 / K
        int n_power_twice;          // 2 * exponent of n in the law
        double tolerance;
    };
    std::vector<Law> laws;
    laws.push_back({"A", "n 4^n / 256", ascending(T), 256, 2, 0.02});
    laws.push_back({"C21", "n 4^n / 768", c21(T), 768, 2, 0.02});
    laws.push_back({"Z", "n 4^n / 384", z_convex(T), 384, 2, 0.02});
    laws.push_back({"C", "n 4^n / 128", convex(T), 128, 2, 0.02});
    laws.push_back({"E", "3 4^n / 128", centered(T), Q(128, 3), 0, 0.02});
    laws.push_back({"C22", "sqrt(n) 4^n / (64 sqrt(pi))", c22(T), 64, 1, 0.05});

    auto normalized = [&](const Law& law, int m, const BigInt& four_m) {
        Rational r = law.series[static_cast<std::size_t>(m)] * law.inverse_constant / Rational(four_m);
        double v = r.get_d();
        if (law.n_power_twice == 2) v /= m;
        if (law.n_power_twice == 1) v *= std::sqrt(std::numbers::pi / m);
        return v;
    };

    std::vector<AsymptoticCheck> out;
    const double root2 = std::numbers::sqrt2;
    for (const auto& law : laws) {
        AsymptoticCheck c;
        c.name = law.name;
        c.law = law.law;
        c.ratio_n = normalized(law, n, four_n);
        c.ratio_2n = normalized(law, 2 * n, four_2n);
        c.naive = 2 * c.ratio_2n - c.ratio_n;
        c.extrapolated = (root2 * c.ratio_2n - c.ratio_n) / (root2 - 1);
        c.tolerance = law.tolerance;
        c.passed = std::abs(c.extrapolated - 1) <= c.tolerance;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace zcx
