#pragma once

#include "nclab/exact.hpp"
#include "nclab/kernels.hpp"
#include "nclab/ncpart.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace nclab {

/// A finite poset on indices 0..size()-1 with an explicit bit-matrix order
/// relation and a rank per element. Immutable after construction.
///
/// Möbius rows are computed on first use and cached; the cache is
/// write-once per row, so concurrent queries are safe.
class FinitePoset {
public:
    // `leq[a][b]` must be a partial order; throws DomainError otherwise.
    FinitePoset(std::vector<BitRow> leq, std::vector<int> rank);

    std::size_t size() const { return rank_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    int rank(std::size_t a) const { return rank_[a]; }
    int max_rank() const { return max_rank_; }

    const BitRow& up_set(std::size_t a) const { return up_[a]; }
    const BitRow& down_set(std::size_t a) const { return down_[a]; }
    const std::vector<std::size_t>& elements_of_rank(int r) const;

    // Indices sorted so that a < b in the poset implies a comes first.
    const std::vector<std::size_t>& linear_extension() const { return linear_; }

    // All (a, b) with a < b and nothing strictly between, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

    // True iff every cover raises the rank by exactly one.
    bool is_graded() const;

    // mu(a, b); throws DomainError unless a <= b.
    std::int64_t moebius(std::size_t a, std::size_t b) const;
    // mu(a, .) indexed by element; zero off the up-set of a.
    const std::vector<std::int64_t>& moebius_row(std::size_t a) const;
    // Fills every row of the cache; the parallel form spreads rows over threads.
    void precompute_moebius(Exec exec) const;

private:
    std::vector<std::int64_t> compute_moebius_row(std::size_t a) const;

    std::vector<BitRow> up_;
    std::vector<BitRow> down_;
    std::vector<int> rank_;
    int max_rank_ = 0;
    std::vector<std::vector<std::size_t>> by_rank_;
    std::vector<std::size_t> linear_;

    struct MoebiusCache;
    std::shared_ptr<MoebiusCache> moebius_cache_;
};

/// A poset together with the objects its indices stand for.
template <class T>
struct LabelledPoset {
    std::vector<T> elements;
    FinitePoset order;
};

// NC_{n,t}^{(m)} under refinement, ranked by n - bl. Throws InvariantError
// if the result is not graded.
LabelledPoset<SetPartition> build_refinement_poset(const Params& p, Exec exec = Exec::parallel,
                                                   std::uint64_t cap = kDefaultObjectCap);

// Number of tuples x_1 <= ... <= x_l with rank(x_i) = targets[i].
// Throws ParameterError if targets decrease.
Integer count_rank_multichains(const FinitePoset& poset, const std::vector<int>& targets);

// Saturated chains from rank 0 to the top rank (1 for a poset with a single rank).
Integer count_maximal_chains(const FinitePoset& poset);

// Weakly increasing (l-1)-tuples; l = 1 gives 1.
Integer zeta_brute(const FinitePoset& poset, int l);

// Checks that tilde maps NC_{n,t}^{(m)} onto a down-closed subset of
// NC_{n,1}^{(m)}, preserving and reflecting refinement.
bool verify_ideal_embedding(const Params& p, std::uint64_t cap = kDefaultObjectCap);

} // namespace nclab
