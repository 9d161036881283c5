#include "oracles.hpp"

#include "nclab/closedform.hpp"
#include "nclab/errors.hpp"
#include "nclab/jsonio.hpp"
#include "nclab/polyalg.hpp"

#include <doctest.h>

using namespace nclab;

namespace {

const Polynomial X = Polynomial::x();
const Polynomial Y = Polynomial::y();

// sum of mu(a,b) x^rk(a) y^rk(b), with mu from its recursive definition over
// the definition-filtered set.
Polynomial m_triangle_by_definition(const Params& p) {
    const auto elements = oracle::nc_by_definition(p);
    const std::size_t size = elements.size();
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) leq[a][b] = oracle::refines_by_definition(elements[a], elements[b]);
    }
    auto rank = [&](std::size_t a) { return p.n - elements[a].block_count(); };
    Polynomial out;
    for (std::size_t a = 0; a < size; ++a) {
        // Increasing rank is a linear extension.
        std::vector<std::size_t> above;
        for (std::size_t b = 0; b < size; ++b) {
            if (leq[a][b]) above.push_back(b);
        }
        std::sort(above.begin(), above.end(), [&](auto u, auto v) { return rank(u) < rank(v); });
        std::vector<long> mu(size, 0);
        for (auto b : above) {
            if (b == a) {
                mu[b] = 1;
                continue;
            }
            long acc = 0;
            for (auto c : above) {
                if (c != b && leq[c][b]) acc += mu[c];
            }
            mu[b] = -acc;
            out.add_term(rank(a), rank(b), mu[b]);
        }
        out.add_term(rank(a), rank(a), 1);
    }
    return out;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial p = X * Y + X + 3;
    CHECK(p.to_string() == "x*y + x + 3");
    CHECK((p - p).is_zero());
    CHECK(((X + 1).pow(3)).coefficient(2, 0) == 3);
    CHECK((X + Y).pow(0) == Polynomial(1));
    CHECK_THROWS_AS(X.pow(-1), ParameterError);
    CHECK(p.eval(2, 5) == 15);
    CHECK(Polynomial::monomial(-1, 0).eval(Rational(1, 2), 0) == 2);
    CHECK_THROWS_AS(Polynomial::monomial(-1, 0).eval(0, 0), DomainError);
    CHECK(Polynomial::monomial(1, 2, Rational(-3, 4)).to_string() == "-3/4*x*y^2");
    CHECK(Polynomial::monomial(0, 0, Rational(6, 4)) == Polynomial(Rational(3, 2)));
    CHECK(p.max_x_degree() == 1);
    CHECK(p.max_y_degree() == 1);
}

TEST_CASE("substitution clears denominators") {
    // x -> 1/(1-y) in 1 + x gives (2-y)/(1-y).
    const auto r = substitute(1 + X, RationalExpr(1, 1 - Y), RationalExpr(Y, 1));
    CHECK(r == RationalExpr(2 - Y, 1 - Y));
    CHECK_THROWS_AS(RationalExpr(1, 0), InvariantError);
    CHECK_THROWS_AS(substitute(Polynomial::monomial(-1, 0), RationalExpr(X, 1), RationalExpr(Y, 1)), DomainError);
}

TEST_CASE("M-triangle: Möbius sum equals closed form and the recursive definition") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; m * n <= 6; ++n) {
            for (int t = 1; t <= n; ++t) {
                const Params p(m, n, t);
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(t);
                const auto brute = m_triangle_brute(p, Exec::serial);
                CHECK(brute == m_triangle_closed(p));
                CHECK(brute == m_triangle_by_definition(p));
                CHECK(brute == m_triangle_brute(p, Exec::parallel));
            }
        }
    }
    CHECK(m_triangle_closed(Params(1, 3, 1)).coefficient(0, 2) == 2);
}

TEST_CASE("H and F closed forms") {
    CHECK(h_triangle_closed(Params(2, 3, 2)) == X * Y + X + 3);
    CHECK(h_triangle_closed(Params(1, 4, 2)) ==
          X.pow(2) * Y.pow(2) + X.pow(2) * Y + X.pow(2) + 2 * X * Y + 3 * X + 1);
    // The coefficients of H add up to the number of elements.
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 6; ++n) {
            for (int t = 1; t <= n; ++t) {
                const Params p(m, n, t);
                CHECK(h_triangle_closed(p).eval(1, 1) == Rational(total_count(p)));
            }
        }
    }
}

TEST_CASE("substitution identities hold with prefactor 1+x(y-1)") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 6; ++n) {
            for (int t = 1; t <= n; ++t) {
                const auto report = verify_transformation_identities(Params(m, n, t));
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(t);
                CHECK(report.all_hold());
                CHECK(report.checks.size() == 7);
                CHECK((report.h_from_m_prefactor == "1+x(y-1)" || report.h_from_m_prefactor == "both"));
            }
        }
    }
    // With a positive rank the two prefactors differ and only 1+x(y-1) works.
    CHECK(verify_transformation_identities(Params(2, 3, 2)).h_from_m_prefactor == "1+x(y-1)");
    CHECK(verify_transformation_identities(Params(2, 3, 3)).h_from_m_prefactor == "both");
}

TEST_CASE("identity checker detects a wrong triangle") {
    const Params p(2, 3, 1);
    const Polynomial F = f_triangle_closed(p);
    const Polynomial H = h_triangle_closed(p);
    const int e = p.max_rank();
    const auto rhs = substitute(H, RationalExpr(X + 1, X), RationalExpr(Y + 1, X + 1));
    CHECK(F * rhs.denominator == X.pow(e) * rhs.numerator);
    const Polynomial broken = H + X;
    const auto wrong = substitute(broken, RationalExpr(X + 1, X), RationalExpr(Y + 1, X + 1));
    CHECK_FALSE(F * wrong.denominator == X.pow(e) * wrong.numerator);
}

TEST_CASE("golden polynomial JSON is byte-exact") {
    CHECK(to_json(h_triangle_closed(Params(2, 3, 2))).dump() ==
          R"({"terms":[{"x":0,"y":0,"c":"3"},{"x":1,"y":0,"c":"1"},{"x":1,"y":1,"c":"1"}]})");
    CHECK(to_json(Polynomial()).dump() == R"({"terms":[]})");
    const Polynomial q = Polynomial::monomial(2, 1, Rational(-1, 3)) + 5;
    CHECK(to_json(q).dump() == R"({"terms":[{"x":0,"y":0,"c":"5"},{"x":2,"y":1,"c":"-1/3"}]})");
    CHECK(polynomial_from_json(to_json(q)) == q);
}
