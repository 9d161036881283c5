#pragma once

#include "nclab/exact.hpp"
#include "nclab/kernels.hpp"
#include "nclab/ncpart.hpp"
#include "nclab/polyalg.hpp"
#include "nclab/posetcore.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nclab {

/// An element (i, j), 1 <= i < j <= n, of the triangular poset T_n.
struct PairIJ {
    int i = 1;
    int j = 2;

    friend auto operator<=>(const PairIJ&, const PairIJ&) = default;
};

using PairSet = std::set<PairIJ>;

// (i,j) + (k,l) = (i,l) when j = k, otherwise nothing. Not symmetric.
std::optional<PairIJ> formal_sum(PairIJ a, PairIJ b);
PairSet setwise_sum(const PairSet& a, const PairSet& b);

// (i,j) precedes (k,l) iff i >= k and j <= l.
bool precedes(PairIJ a, PairIJ b);

/// Bit layout of T_n (n <= 11, so at most 55 pairs fit one word).
class TriangularPoset {
public:
    using Mask = std::uint64_t;
    static constexpr int kMaxN = 11;

    explicit TriangularPoset(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    int index(PairIJ p) const;
    PairIJ pair(int idx) const { return pairs_[static_cast<std::size_t>(idx)]; }

    Mask all() const { return all_; }
    // T_{n,t} = {(i,j) : j > t}
    Mask above(int t) const;

    Mask to_mask(const PairSet& s) const;
    PairSet to_set(Mask mask) const;

    Mask sum(Mask a, Mask b) const;
    bool is_up_closed(Mask mask) const;
    Mask minimal_elements(Mask mask) const;
    // Smallest filter of T_n containing the mask.
    Mask up_closure(Mask mask) const;

private:
    int n_;
    std::vector<PairIJ> pairs_;
    std::vector<int> index_; // (i, j) -> bit, -1 when i >= j
    Mask all_ = 0;
    std::vector<Mask> starting_at_; // pairs (j, l) for each j
    std::vector<Mask> upper_covers_;
    std::vector<Mask> lower_covers_;
};

/// An up-closed subset of T_{n,t}.
class TFilter {
public:
    using Mask = TriangularPoset::Mask;

    TFilter(int n, int t, Mask bits);
    // Throws DomainError unless the pairs lie in T_{n,t} and are up-closed.
    static TFilter from_pairs(int n, int t, const PairSet& pairs);

    int n() const { return n_; }
    int t() const { return t_; }
    Mask bits() const { return bits_; }
    int size() const;
    bool contains(PairIJ p) const;
    bool is_subset_of(const TFilter& o) const { return (bits_ & ~o.bits_) == 0; }
    PairSet members() const;
    PairSet minimal_elements() const;

    friend bool operator==(const TFilter& a, const TFilter& b) {
        return a.n_ == b.n_ && a.t_ == b.t_ && a.bits_ == b.bits_;
    }

private:
    int n_;
    int t_;
    Mask bits_;
};

/// (V_m, V_{m-1}, ..., V_1) with V_m inside V_{m-1} inside ... inside V_1.
class FilterChain {
public:
    // `components` in tuple order: components[0] is V_m. Throws DomainError
    // if the nesting fails or the components disagree on n, t.
    explicit FilterChain(std::vector<TFilter> components);

    int m() const { return static_cast<int>(components_.size()); }
    int n() const { return components_.front().n(); }
    int t() const { return components_.front().t(); }
    // V_k for 1 <= k <= m; larger k clamp to V_m.
    const TFilter& v(int k) const;
    const std::vector<TFilter>& components() const { return components_; }
    int total_size() const;
    bool is_subset_of(const FilterChain& o) const;

    friend bool operator==(const FilterChain& a, const FilterChain& b) { return a.components_ == b.components_; }

private:
    std::vector<TFilter> components_;
};

/// Where complements in the second geometric condition are taken: in T_n
/// ("paper") or in T_{n,t} ("adapted").
enum class ComplementVariant { paper, adapted };

std::string to_string(ComplementVariant v);
ComplementVariant parse_variant(const std::string& text);

bool is_geometric(const FilterChain& chain, ComplementVariant variant);

// All t-filters of T_{n,t}, ordered by their bit mask.
std::vector<TFilter> enumerate_t_filters(int n, int t);

// All geometric m-chains of t-filters, deterministic order.
std::vector<FilterChain> enumerate_nn(const Params& p, ComplementVariant variant = ComplementVariant::paper,
                                      Exec exec = Exec::parallel, std::uint64_t cap = kDefaultObjectCap);

// Serial reference: filters every nested m-tuple with is_geometric, no pruning.
std::vector<FilterChain> enumerate_nn_reference(const Params& p, ComplementVariant variant,
                                                std::uint64_t cap = kDefaultObjectCap);

// W_m \ V_m.
PairSet fl(const FilterChain& lower, const FilterChain& upper);

// {(t,t+1), ..., (n-1,n)}
PairSet minimal_pairs(int n, int t);

struct NnCover {
    std::size_t lower = 0;
    std::size_t upper = 0;
    PairSet label; // fl(lower, upper)
};

struct NnPoset {
    std::vector<FilterChain> elements;
    FinitePoset order;
    std::vector<NnCover> covers;
    std::vector<PairSet> floors; // FL per element
    // Covers where more than one component changes, or by more than one pair.
    std::vector<std::string> cover_violations;
};

NnPoset nn_poset(const Params& p, ComplementVariant variant = ComplementVariant::paper, Exec exec = Exec::parallel,
                 std::uint64_t cap = kDefaultObjectCap);

// sum over geometric chains of x^|FL| y^|FL cap S_{n,t}|
Polynomial h_tilde(const Params& p, ComplementVariant variant = ComplementVariant::paper, Exec exec = Exec::parallel,
                   std::uint64_t cap = kDefaultObjectCap);
Polynomial h_tilde(const NnPoset& poset, int n, int t);

struct ConjectureRow {
    Params params;
    Integer chain_count;
    Integer predicted_count;
    bool count_matches = false;
    Polynomial h_tilde;
    Polynomial h_closed;
    bool h_matches = false;
};

// Compares |NN| with the NC count and H-tilde with the closed H-triangle.
// Reports evidence only; never throws on a mismatch.
std::vector<ConjectureRow> verify_conjectures(const std::vector<Params>& params,
                                              ComplementVariant variant = ComplementVariant::paper,
                                              Exec exec = Exec::parallel, std::uint64_t cap = kDefaultObjectCap);

} // namespace nclab
