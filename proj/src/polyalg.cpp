#include "nclab/polyalg.hpp"

#include "nclab/errors.hpp"
#include "nclab/posetcore.hpp"

#include <algorithm>
#include <sstream>

namespace nclab {

Polynomial::Polynomial(const Rational& c) { add_term(0, 0, c); }

Polynomial Polynomial::monomial(int ex, int ey, const Rational& c) {
    Polynomial p;
    p.add_term(ex, ey, c);
    return p;
}

Rational Polynomial::coefficient(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(int ex, int ey, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::max_x_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int Polynomial::max_y_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

bool Polynomial::has_negative_exponents() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first < 0 || t.first.second < 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) product.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
    terms_ = std::move(product.terms_);
    return *this;
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw ParameterError("Polynomial::pow: negative exponent");
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("negative power of zero in evaluation");
        return 1 / rational_power(base, -exponent);
    }
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace

Rational Polynomial::eval(const Rational& x0, const Rational& y0) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += c * rational_power(x0, e.first) * rational_power(y0, e.second);
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto factor = [&mono](const char* var, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (k != 1) mono += "^" + std::to_string(k);
        };
        factor("x", e.first);
        factor("y", e.second);
        if (mono.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono;
        } else {
            os << mag.get_str() << "*" << mono;
        }
    }
    return os.str();
}

RationalExpr::RationalExpr(Polynomial num, Polynomial den) : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.is_zero()) throw InvariantError("rational expression with zero denominator");
}

RationalExpr substitute(const Polynomial& source, const RationalExpr& sx, const RationalExpr& sy) {
    if (source.has_negative_exponents()) throw DomainError("substitute: source must be an ordinary polynomial");
    if (sx.denominator.is_zero() || sy.denominator.is_zero()) throw InvariantError("substitute: zero denominator factor");
    const int rx = source.max_x_degree();
    const int ry = source.max_y_degree();
    auto powers = [](const Polynomial& base, int top) {
        std::vector<Polynomial> out{Polynomial(1)};
        for (int k = 1; k <= top; ++k) out.push_back(out.back() * base);
        return out;
    };
    const auto xn = powers(sx.numerator, rx);
    const auto xd = powers(sx.denominator, rx);
    const auto yn = powers(sy.numerator, ry);
    const auto yd = powers(sy.denominator, ry);
    Polynomial numerator;
    for (const auto& [e, c] : source.terms()) {
        const auto r = static_cast<std::size_t>(e.first);
        const auto s = static_cast<std::size_t>(e.second);
        numerator += (xn[r] * xd[static_cast<std::size_t>(rx) - r] * yn[s] * yd[static_cast<std::size_t>(ry) - s]).scale(c);
    }
    return RationalExpr(numerator, xd.back() * yd.back());
}

Polynomial m_triangle_brute(const Params& p, Exec exec, std::uint64_t cap) {
    const auto poset = build_refinement_poset(p, exec, cap);
    const auto& order = poset.order;
    order.precompute_moebius(exec);
    Polynomial out;
    for (std::size_t a = 0; a < order.size(); ++a) {
        const auto& mu = order.moebius_row(a);
        const auto& up = order.up_set(a);
        for (auto b = up.find_first(); b != BitRow::npos; b = up.find_next(b)) {
            out.add_term(order.rank(a), order.rank(b), Rational(static_cast<long>(mu[b])));
        }
    }
    return out;
}

void require_nonnegative_integral(const Polynomial& poly, const std::string& what) {
    for (const auto& [e, c] : poly.terms()) {
        if (c.get_den() != 1) throw InvariantError(what + ": non-integral coefficient " + c.get_str());
        if (c < 0) throw InvariantError(what + ": negative coefficient " + c.get_str());
    }
}

namespace {

void require_integral_coefficients(const Polynomial& poly, const std::string& what) {
    for (const auto& [e, c] : poly.terms()) {
        if (c.get_den() != 1) throw InvariantError(what + ": non-integral coefficient " + c.get_str());
    }
}

} // namespace

Polynomial m_triangle_closed(const Params& p) {
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const std::int64_t shifted = mn - p.t + 1;
    const int top = p.max_rank();
    Polynomial out;
    for (int r = 0; r <= top; ++r) {
        for (int s = r; s <= top; ++s) {
            Rational c(Integer(p.t * shifted - static_cast<std::int64_t>(top - s) * (p.t - 1)), Integer(p.n * shifted));
            c.canonicalize();
            c *= binomial(p.n, r) * binomial(shifted, top - s) * binomial(mn + s - r - 1, s - r);
            if ((s - r) % 2 != 0) c = -c;
            out.add_term(r, s, c);
        }
    }
    require_integral_coefficients(out, "M-triangle closed form");
    return out;
}

Polynomial h_triangle_closed(const Params& p) {
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const int top = p.max_rank();
    Polynomial out;
    for (int k = 0; k <= top; ++k) {
        for (int h = 0; h <= top - k; ++h) {
            Integer c = binomial(mn - p.t + 1, k) * binomial(p.t + k + h - 2, h) -
                        Integer(p.m) * binomial(mn - p.t, k - 1) * binomial(p.t + k + h - 1, h);
            out.add_term(top - k, top - k - h, Rational(c));
        }
    }
    require_nonnegative_integral(out, "H-triangle closed form");
    return out;
}

Polynomial f_triangle_closed(const Params& p) {
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const int top = p.max_rank();
    Polynomial out;
    for (int a = 0; a <= top; ++a) {
        for (int b = 0; b <= top - a; ++b) {
            Rational c(binomial(mn + a - 1, a) * binomial(p.n, p.t + a + b) * (p.t + b), Integer(p.n));
            c.canonicalize();
            out.add_term(a, b, c);
        }
    }
    require_nonnegative_integral(out, "F-triangle closed form");
    return out;
}

bool TransformationReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return !c.required || c.holds; });
}

namespace {

// target == prefactor * source(sx, sy), compared after clearing denominators.
bool identity_holds(const Polynomial& target, const Polynomial& prefactor, const Polynomial& source,
                    const RationalExpr& sx, const RationalExpr& sy) {
    const RationalExpr rhs = substitute(source, sx, sy);
    return target * rhs.denominator == prefactor * rhs.numerator;
}

} // namespace

TransformationReport verify_transformation_identities(const Params& p) {
    const Polynomial M = m_triangle_closed(p);
    const Polynomial F = f_triangle_closed(p);
    const Polynomial H = h_triangle_closed(p);
    const Polynomial x = Polynomial::x();
    const Polynomial y = Polynomial::y();
    const Polynomial one(1);
    const int e = p.max_rank();

    TransformationReport report;
    report.params = p;
    auto add = [&](std::string name, bool holds, bool required = true) {
        report.checks.push_back(IdentityCheck{std::move(name), holds, required});
    };

    add("F=y^(n-t)*M((y+1)/(y-x),(y-x)/y)",
        identity_holds(F, y.pow(e), M, RationalExpr(y + one, y - x), RationalExpr(y - x, y)));
    add("F=x^(n-t)*H((x+1)/x,(y+1)/(x+1))",
        identity_holds(F, x.pow(e), H, RationalExpr(x + one, x), RationalExpr(y + one, x + one)));

    const Polynomial xy1 = x * (y - one);
    const bool h_minus = identity_holds(H, (one + xy1).pow(e), M, RationalExpr(y, y - one), RationalExpr(xy1, xy1 + one));
    const bool h_plus =
        identity_holds(H, (one + x * (y + one)).pow(e), M, RationalExpr(y, y - one), RationalExpr(xy1, xy1 + one));
    add("H=(1+x(y-1))^(n-t)*M(y/(y-1),x(y-1)/(x(y-1)+1))", h_minus);
    add("H=(1+x(y+1))^(n-t)*M(y/(y-1),x(y-1)/(x(y-1)+1))", h_plus, false);
    report.h_from_m_prefactor = h_minus && h_plus ? "both" : h_minus ? "1+x(y-1)" : h_plus ? "1+x(y+1)" : "neither";

    add("H=(x-1)^(n-t)*F(1/(x-1),(x(y-1)+1)/(x-1))",
        identity_holds(H, (x - one).pow(e), F, RationalExpr(one, x - one), RationalExpr(xy1 + one, x - one)));
    add("M=(xy-1)^(n-t)*F((1-y)/(xy-1),1/(xy-1))",
        identity_holds(M, (x * y - one).pow(e), F, RationalExpr(one - y, x * y - one), RationalExpr(one, x * y - one)));
    add("M=(1-y)^(n-t)*H(y(x-1)/(1-y),x/(x-1))",
        identity_holds(M, (one - y).pow(e), H, RationalExpr(y * (x - one), one - y), RationalExpr(x, x - one)));
    return report;
}

} // namespace nclab
