#pragma once

#include "nclab/exact.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace nclab {

/// Divisibility m, size n and parabolic parameter t; the ground set is [m*n].
struct Params {
    int m = 1;
    int n = 1;
    int t = 1;

    Params() = default;
    // Throws ParameterError unless m >= 1, n >= 1 and 1 <= t <= n.
    Params(int m, int n, int t);

    int ground_size() const { return m * n; }
    int max_rank() const { return n - t; }

    friend auto operator<=>(const Params&, const Params&) = default;
};

/// Default cap on the number of objects an enumeration may produce.
inline constexpr std::uint64_t kDefaultObjectCap = 10'000'000;

/// A set partition of [N] held in canonical form: blocks sorted by their
/// minimum, elements ascending inside each block. Elements are 1-based.
class SetPartition {
public:
    SetPartition() = default;
    // Validates that `blocks` cover [ground_size] exactly once with no empty
    // block, then canonicalizes. Throws DomainError otherwise.
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    // Builds from a label per element (labels[i-1] is the label of i). Any
    // labelling works; equal labels mean same block.
    static SetPartition from_labels(const std::vector<int>& labels);

    static SetPartition singletons(int ground_size);

    int ground_size() const { return ground_size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Index into blocks() of the block holding element i (1-based).
    int block_of(int i) const { return block_index_[static_cast<std::size_t>(i - 1)]; }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.ground_size_ == b.ground_size_ && a.blocks_ == b.blocks_;
    }
    // Lexicographic on the restricted-growth word; used for deterministic order.
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.ground_size_ != b.ground_size_) return a.ground_size_ < b.ground_size_;
        return a.block_index_ < b.block_index_;
    }

private:
    int ground_size_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;
};

/// b[i-1] = number of blocks of size m*i, for i = 1..n.
struct BlockProfile {
    std::vector<std::int64_t> counts;

    std::int64_t block_total() const;
    // sum of i * b_i
    std::int64_t weighted_total() const;

    friend auto operator<=>(const BlockProfile&, const BlockProfile&) = default;
};

/// The monomial x_1^{b_1} x_2^{b_2} ... (only non-zero exponents kept).
struct WeightSignature {
    std::map<int, std::int64_t> exponents;

    friend bool operator==(const WeightSignature&, const WeightSignature&) = default;
};

bool is_t_partition(const SetPartition& pi, int t);

bool is_m_divisible(const SetPartition& pi, int m);

// The t-aware quadruple test; t = 1 gives the classical crossing test.
// Throws DomainError if pi is not a t-partition.
bool is_noncrossing_t(const SetPartition& pi, int t);

// True iff pi is m-divisible on [m*n], a t-partition and non-crossing.
bool is_member(const SetPartition& pi, const Params& p);

bool refines(const SetPartition& finer, const SetPartition& coarser);

// n minus the number of blocks.
int rank_of(const SetPartition& pi, const Params& p);

BlockProfile block_profile(const SetPartition& pi, const Params& p);
WeightSignature weight_signature(const BlockProfile& profile);

// Relabels i -> t + 1 - i for i <= t; elements above t are fixed.
SetPartition tilde_transform(const SetPartition& pi, int t);

// All m-divisible classical non-crossing partitions of [m*n] in canonical
// order, generated by first-block decomposition.
std::vector<SetPartition> enumerate_classical_nc(int m, int n, std::uint64_t cap = kDefaultObjectCap);

// All elements of NC_{n,t}^{(m)} in canonical order. Throws ResourceError
// when the predicted work exceeds `cap`.
std::vector<SetPartition> enumerate_nc(const Params& p, std::uint64_t cap = kDefaultObjectCap);

// Every set partition of [N] (restricted growth words), unfiltered.
std::vector<SetPartition> enumerate_all_partitions(int ground_size);

// All block profiles with sum of i*b_i = n, in lexicographic order.
std::vector<BlockProfile> all_profiles(int n);

} // namespace nclab
