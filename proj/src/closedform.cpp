#include "nclab/closedform.hpp"

#include "nclab/errors.hpp"

#include <numeric>
#include <string>

namespace nclab {

namespace {

void check_rank_vector(const Params& p, const RankVector& s) {
    if (s.s.size() < 2) throw ParameterError("rank vector needs at least two entries (l >= 1)");
    std::int64_t sum = 0;
    for (auto v : s.s) {
        if (v < 0) throw ParameterError("rank vector entries must be non-negative");
        sum += v;
    }
    if (sum != p.max_rank()) {
        throw ParameterError("rank vector sums to " + std::to_string(sum) + ", expected n-t=" + std::to_string(p.max_rank()));
    }
}

void check_profile(const Params& p, const BlockProfile& b) {
    for (auto v : b.counts) {
        if (v < 0) throw ParameterError("block profile entries must be non-negative");
    }
    if (b.weighted_total() != p.n) throw ParameterError("block profile does not satisfy sum i*b_i = n");
}

// Shared leading factor (t(mn-t+1) - s_last(t-1)) / (mn-t+1).
Rational chain_prefactor(const Params& p, std::int64_t s_last) {
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const std::int64_t shifted = mn - p.t + 1;
    return Rational(Integer(p.t * shifted - s_last * (p.t - 1)), Integer(shifted));
}

} // namespace

std::vector<int> RankVector::targets() const {
    std::vector<int> out;
    std::int64_t running = 0;
    for (int i = 0; i < chain_length(); ++i) {
        running += s[static_cast<std::size_t>(i)];
        out.push_back(static_cast<int>(running));
    }
    return out;
}

std::vector<RankVector> all_rank_vectors(const Params& p, int l) {
    if (l < 1) throw ParameterError("chain length l must be >= 1");
    std::vector<RankVector> out;
    std::vector<std::int64_t> s(static_cast<std::size_t>(l + 1), 0);
    auto rec = [&](auto&& self, int i, std::int64_t remaining) -> void {
        if (i == l) {
            s[static_cast<std::size_t>(i)] = remaining;
            out.push_back(RankVector{s});
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            s[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, p.max_rank());
    return out;
}

Integer multichain_count_formula(const Params& p, const RankVector& s) {
    check_rank_vector(p, s);
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const int l = s.chain_length();
    Rational value = chain_prefactor(p, s.s.back()) / Integer(p.n);
    Integer product = binomial(p.n, s.s[0]);
    for (int i = 1; i < l; ++i) product *= binomial(mn, s.s[static_cast<std::size_t>(i)]);
    product *= binomial(mn - p.t + 1, s.s.back());
    value *= product;
    value.canonicalize();
    return require_integral(value, "multichain count formula");
}

Integer count_by_profile(const Params& p, const BlockProfile& b) {
    check_profile(p, b);
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const std::int64_t shifted = mn - p.t + 1;
    const std::int64_t blocks = b.block_total();
    Rational value(Integer(shifted * blocks - mn * (blocks - p.t)), Integer(shifted * blocks));
    value.canonicalize();
    value *= binomial(shifted, blocks - p.t) * multinomial(b.counts);
    value.canonicalize();
    return require_integral(value, "count by profile");
}

Integer count_by_rank(const Params& p, int s) {
    if (s < 0 || s > p.max_rank()) {
        throw ParameterError("rank " + std::to_string(s) + " outside [0, n-t=" + std::to_string(p.max_rank()) + "]");
    }
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const std::int64_t shifted = mn - p.t + 1;
    Rational value(Integer(mn * p.t - static_cast<std::int64_t>(p.n - s) * (p.t - 1)), Integer(p.n * shifted));
    value.canonicalize();
    value *= binomial(shifted, p.n - s - p.t) * binomial(p.n, s);
    value.canonicalize();
    return require_integral(value, "count by rank");
}

Integer total_count(const Params& p) {
    const std::int64_t m = p.m;
    const std::int64_t n = p.n;
    Rational value(Integer(m * p.t + 1), Integer(m * n + 1));
    value.canonicalize();
    value *= binomial((m + 1) * n - p.t, n - p.t);
    value.canonicalize();
    return require_integral(value, "total count");
}

Integer chain_count_with_profile(const Params& p, const RankVector& s, const BlockProfile& b) {
    check_rank_vector(p, s);
    for (auto v : b.counts) {
        if (v < 0) throw ParameterError("block profile entries must be non-negative");
    }
    const std::int64_t blocks = b.block_total();
    if (b.weighted_total() != p.n || s.s[0] + blocks != p.n) return 0;
    const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
    const int l = s.chain_length();
    Rational value = chain_prefactor(p, s.s.back()) / Integer(blocks);
    Integer product = multinomial(b.counts);
    for (int i = 1; i < l; ++i) product *= binomial(mn, s.s[static_cast<std::size_t>(i)]);
    product *= binomial(mn - p.t + 1, s.s.back());
    value *= product;
    value.canonicalize();
    return require_integral(value, "chain count with profile");
}

Integer max_chains_formula(const Params& p) {
    if (p.n == p.t) throw UnsupportedParameter("maximal-chain formula t(mn)^{n-t-1} needs n > t");
    return Integer(p.t) * power(Integer(p.m * p.n), static_cast<std::uint64_t>(p.n - p.t - 1));
}

Integer zeta_formula(const Params& p, int l) {
    if (l < 1) throw ParameterError("zeta polynomial argument l must be >= 1");
    const std::int64_t k = static_cast<std::int64_t>(l - 1) * p.m;
    Rational value(Integer(k * p.t + 1), Integer(k * p.n + 1));
    value.canonicalize();
    value *= binomial(p.n + k * p.n - p.t, p.n - p.t);
    value.canonicalize();
    return require_integral(value, "zeta polynomial");
}

} // namespace nclab
