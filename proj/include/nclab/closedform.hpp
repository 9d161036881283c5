#pragma once

#include "nclab/exact.hpp"
#include "nclab/ncpart.hpp"

#include <cstdint>
#include <vector>

namespace nclab {

/// Rank increments s_1, ..., s_{l+1} of a multi-chain; the ranks of the
/// chain elements are the partial sums s_1, s_1 + s_2, ..., s_1 + ... + s_l.
struct RankVector {
    std::vector<std::int64_t> s;

    // Number of chain elements l (one less than the number of increments).
    int chain_length() const { return static_cast<int>(s.size()) - 1; }
    // Partial sums s_1, s_1+s_2, ..., up to index l.
    std::vector<int> targets() const;
};

// Every RankVector with l+1 non-negative entries summing to n - t, in
// lexicographic order.
std::vector<RankVector> all_rank_vectors(const Params& p, int l);

// Multi-chains pi_1 <= ... <= pi_l with prescribed ranks:
//   (t(mn-t+1) - s_{l+1}(t-1)) / (n(mn-t+1))
//     * C(n, s_1) C(mn, s_2) ... C(mn, s_l) C(mn-t+1, s_{l+1})
Integer multichain_count_formula(const Params& p, const RankVector& s);

// Elements with b_i blocks of size m*i.
Integer count_by_profile(const Params& p, const BlockProfile& b);

// Elements of rank s, 0 <= s <= n - t.
Integer count_by_rank(const Params& p, int s);

// |NC_{n,t}^{(m)}| = (mt+1)/(mn+1) C((m+1)n - t, n - t).
Integer total_count(const Params& p);

// Multi-chains with prescribed ranks whose bottom element has profile b;
// zero unless sum i*b_i = n and s_1 + sum b_i = n.
Integer chain_count_with_profile(const Params& p, const RankVector& s, const BlockProfile& b);

// t (mn)^{n-t-1}; throws UnsupportedParameter when n = t.
Integer max_chains_formula(const Params& p);

// Number of multi-chains of length l - 1 (zeta polynomial at l >= 1).
Integer zeta_formula(const Params& p, int l);

} // namespace nclab
