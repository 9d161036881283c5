#pragma once

#include "nclab/exact.hpp"
#include "nclab/kernels.hpp"
#include "nclab/ncpart.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nclab {

/// Sparse bivariate Laurent polynomial in x, y over the rationals. Terms
/// with a zero coefficient are never stored.
class Polynomial {
public:
    using Exponent = std::pair<int, int>; // (x-degree, y-degree)
    using Terms = std::map<Exponent, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c); // NOLINT: constants convert implicitly
    Polynomial(int c) : Polynomial(Rational(c)) {} // NOLINT

    static Polynomial monomial(int ex, int ey, const Rational& c = 1);
    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int ex, int ey) const;
    void add_term(int ex, int ey, const Rational& c);

    // Largest x- and y-exponents present (0 for the zero polynomial).
    int max_x_degree() const;
    int max_y_degree() const;
    bool has_negative_exponents() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const;

    Polynomial scale(const Rational& c) const;
    // Throws ParameterError for a negative exponent.
    Polynomial pow(int exponent) const;

    // Exact value at (x0, y0); DomainError if a negative power hits zero.
    Rational eval(const Rational& x0, const Rational& y0) const;

    // Human-readable form such as "x*y + x + 3".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// numerator / denominator; the denominator is never the zero polynomial.
struct RationalExpr {
    Polynomial numerator;
    Polynomial denominator = Polynomial(1);

    RationalExpr() = default;
    RationalExpr(Polynomial num, Polynomial den);

    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return a.numerator * b.denominator == b.numerator * a.denominator;
    }
};

// Substitutes x -> sx, y -> sy into `source` (non-negative exponents only)
// and brings the sum over the common denominator sx.den^R * sy.den^S, where
// R, S are the largest x- and y-degrees of `source`.
RationalExpr substitute(const Polynomial& source, const RationalExpr& sx, const RationalExpr& sy);

// Möbius-weighted sum over comparable pairs of NC_{n,t}^{(m)}.
Polynomial m_triangle_brute(const Params& p, Exec exec = Exec::parallel, std::uint64_t cap = kDefaultObjectCap);
Polynomial m_triangle_closed(const Params& p);
Polynomial h_triangle_closed(const Params& p);
Polynomial f_triangle_closed(const Params& p);

struct IdentityCheck {
    std::string name;   // e.g. "F=y^(n-t)M(...)"
    bool holds = false;
    bool required = true; // informational variants do not count towards all_hold
};

struct TransformationReport {
    Params params;
    std::vector<IdentityCheck> checks;
    // Which prefactor makes H from M: "1+x(y-1)", "1+x(y+1)", "both" or "neither".
    std::string h_from_m_prefactor;

    bool all_hold() const;
};

// Checks the six substitution identities linking M, F and H by clearing
// denominators and comparing numerator polynomials exactly. Also reports
// the alternative H-from-M prefactor 1+x(y+1) as an informational row.
TransformationReport verify_transformation_identities(const Params& p);

// Throws InvariantError if any coefficient is negative or non-integral.
void require_nonnegative_integral(const Polynomial& poly, const std::string& what);

} // namespace nclab
