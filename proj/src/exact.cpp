#include "nclab/exact.hpp"

#include "nclab/errors.hpp"

namespace nclab {

Integer binomial(std::int64_t r, std::int64_t k) {
    if (k < 0) return 0;
    if (r >= 0) {
        if (k > r) return 0;
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
        return out;
    }
    // binom(-a, k) = (-1)^k binom(a + k - 1, k)
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(-r + k - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) out = -out;
    return out;
}

Integer multinomial(std::span<const std::int64_t> parts) {
    Integer out = 1;
    std::int64_t running = 0;
    for (std::int64_t part : parts) {
        if (part < 0) return 0;
        running += part;
        out *= binomial(running, part);
    }
    return out;
}

Integer power(const Integer& base, std::uint64_t exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

Integer require_integral(const Rational& q, const std::string& what) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() != 1) {
        throw InvariantError(what + ": expected an integer, got " + c.get_str());
    }
    return c.get_num();
}

std::string to_decimal(const Integer& z) { return z.get_str(10); }

std::string to_decimal(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw ParameterError("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace nclab
