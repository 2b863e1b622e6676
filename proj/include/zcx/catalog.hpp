#pragma once

/**
 * @file catalog.hpp
 * @brief Closed-form generating functions, closed counting formulas and the
 *        identity checks built on them.
 *
 * Every catalog entry is a series in t (t marks the semi-perimeter). Entries
 * with refinement variables are evaluated at rational points: x marks the
 * base height b, y the offset w and z the last-column count r.
 *
 * Square roots of 1 - 4t enter through Series::binomial, which expands
 * (1 - 4t)^(k/2) coefficient by coefficient; Newton sqrt() is an
 * independent route to the same series and is compared against it in tests.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zcx/series.hpp"

namespace zcx {

enum class GfName {
    L,       // L-convex
    E,       // centered convex
    Z,       // Z-convex
    S4,      // 4-stack
    C,       // convex
    D,       // d(t) = (1 - 2t - sqrt(1-4t)) / 2
    H,       // centered ascending
    Rect,    // rectangular ascending
    A,       // ascending
    C22,
    C21,
    C0p,     // rectangular classes, refined
    L0p,
    S0p,
    Sp,
    Cp,
    Lp,
    Np,
    S111,    // non-rectangular classes at x = y = z = 1
    R1,
    C1at1,
    C111,
    L111,
    N1,
};

/// Command-line / report names ("A", "C22", "Np", "S111", ...).
std::string_view name_of(GfName g);
std::optional<GfName> parse_gf_name(std::string_view s);
std::vector<GfName> all_gf_names();

struct GfParams {
    std::optional<Rational> x;
    std::optional<Rational> y;
    std::optional<Rational> z;
};

enum class CatalogError {
    MissingParam,
    DegenerateParam,
    NotScalar,
};

class CatalogException : public std::runtime_error {
public:
    CatalogException(CatalogError code, const std::string& what) : std::runtime_error(what), code_(code) {}
    CatalogError code() const noexcept { return code_; }

private:
    CatalogError code_;
};

/// Parameters each entry reads ("", "xy", "xyz" or "z").
std::string_view required_params(GfName g);
bool is_scalar(GfName g);

/// Coefficients of t^0 .. t^(terms-1) of the named closed form.
Series gf(GfName name, std::size_t terms, const GfParams& params = {});

/// Printed evaluations of the non-rectangular classes at x = y = z = 1.
/// Throws CatalogError::NotScalar for any other name.
Series scalar_gf(GfName name, std::size_t terms);

/// Centered ascending count ((3n-5)/(n-1)) binom(2n-5, n-2); 1 at n = 2.
BigInt h_formula(int n);
/// Rectangular ascending count binom(2n-4, n-2).
BigInt rect_formula(int n);

struct IdentityCheck {
    std::string name;
    bool holds = false;
    long first_failure = -1;  // order of first mismatch, -1 when none
};

/// Kernel-root identities: the z-kernel 1 - z + t z^2 at its root series,
/// the Puiseux pair Z+- in s = sqrt(t), and t z0 = d(t) + t.
std::vector<IdentityCheck> kernel_checks(std::size_t terms);

/// Substitutes the closed forms into the seven rectangular-case functional
/// equations at the rational point (x, y, z). Needs y != 1 and z != 1.
std::vector<IdentityCheck> functional_equation_checks(const Rational& x, const Rational& y, const Rational& z,
                                                      std::size_t terms);

struct AsymptoticCheck {
    std::string name;
    std::string law;
    double ratio_n = 0;      // normalized coefficient at n
    double ratio_2n = 0;     // normalized coefficient at 2n
    double naive = 0;        // 2 rho(2n) - rho(n): cancels an n^-1 correction
    double extrapolated = 0; // cancels an n^-1/2 correction
    double tolerance = 0;
    bool passed = false;
};

/// Normalized-coefficient checks of the growth constants at n and 2n.
std::vector<AsymptoticCheck> asymptotic_checks(int n = 1024);

}  // namespace zcx
