#include "nclab/posetcore.hpp"

#include "nclab/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

namespace nclab {

struct FinitePoset::MoebiusCache {
    explicit MoebiusCache(std::size_t n) : once(new std::once_flag[n]), rows(n) {}
    std::unique_ptr<std::once_flag[]> once;
    std::vector<std::vector<std::int64_t>> rows;
};

FinitePoset::FinitePoset(std::vector<BitRow> leq, std::vector<int> rank) : up_(std::move(leq)), rank_(std::move(rank)) {
    const std::size_t n = rank_.size();
    if (up_.size() != n) throw DomainError("relation matrix and rank vector differ in size");
    down_.assign(n, BitRow(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (up_[a].size() != n) throw DomainError("relation matrix is not square");
        if (!up_[a].test(a)) throw DomainError("order relation is not reflexive");
        for (auto b = up_[a].find_first(); b != BitRow::npos; b = up_[a].find_next(b)) down_[b].set(a);
    }
    for (std::size_t a = 0; a < n; ++a) {
        BitRow both = up_[a] & down_[a];
        both.reset(a);
        if (both.any()) throw DomainError("order relation is not antisymmetric");
        for (auto b = up_[a].find_first(); b != BitRow::npos; b = up_[a].find_next(b)) {
            if (!up_[b].is_subset_of(up_[a])) throw DomainError("order relation is not transitive");
        }
    }

    max_rank_ = n == 0 ? 0 : *std::max_element(rank_.begin(), rank_.end());
    by_rank_.assign(static_cast<std::size_t>(max_rank_ + 1), {});
    for (std::size_t a = 0; a < n; ++a) {
        if (rank_[a] < 0) throw DomainError("negative rank");
        by_rank_[static_cast<std::size_t>(rank_[a])].push_back(a);
    }

    // The down-set strictly grows along the order, so sorting by its size
    // gives a linear extension.
    linear_.resize(n);
    for (std::size_t a = 0; a < n; ++a) linear_[a] = a;
    std::stable_sort(linear_.begin(), linear_.end(),
                     [this](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });

    moebius_cache_ = std::make_shared<MoebiusCache>(n);
}

const std::vector<std::size_t>& FinitePoset::elements_of_rank(int r) const {
    static const std::vector<std::size_t> empty;
    if (r < 0 || r > max_rank_) return empty;
    return by_rank_[static_cast<std::size_t>(r)];
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (auto b = up_[a].find_first(); b != BitRow::npos; b = up_[a].find_next(b)) {
            if (b == a) continue;
            // [a, b] = {a, b} exactly when b covers a.
            if ((up_[a] & down_[b]).count() == 2) out.emplace_back(a, b);
        }
    }
    return out;
}

bool FinitePoset::is_graded() const {
    for (auto [a, b] : cover_relations()) {
        if (rank_[b] != rank_[a] + 1) return false;
    }
    return true;
}

std::vector<std::int64_t> FinitePoset::compute_moebius_row(std::size_t a) const {
    std::vector<std::int64_t> mu(size(), 0);
    mu[a] = 1;
    for (std::size_t b : linear_) {
        if (b == a || !up_[a].test(b)) continue;
        BitRow interval = up_[a] & down_[b];
        interval.reset(b);
        std::int64_t sum = 0;
        for (auto c = interval.find_first(); c != BitRow::npos; c = interval.find_next(c)) sum += mu[c];
        mu[b] = -sum;
    }
    return mu;
}

const std::vector<std::int64_t>& FinitePoset::moebius_row(std::size_t a) const {
    if (a >= size()) throw DomainError("moebius: index out of range");
    auto& cache = *moebius_cache_;
    std::call_once(cache.once[a], [&] { cache.rows[a] = compute_moebius_row(a); });
    return cache.rows[a];
}

std::int64_t FinitePoset::moebius(std::size_t a, std::size_t b) const {
    if (a >= size() || b >= size() || !leq(a, b)) throw DomainError("moebius(a, b) needs a <= b");
    return moebius_row(a)[b];
}

void FinitePoset::precompute_moebius(Exec exec) const {
    const auto n = static_cast<std::int64_t>(size());
    if (exec == Exec::serial) {
        for (std::int64_t a = 0; a < n; ++a) moebius_row(static_cast<std::size_t>(a));
        return;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t a = 0; a < n; ++a) moebius_row(static_cast<std::size_t>(a));
}

LabelledPoset<SetPartition> build_refinement_poset(const Params& p, Exec exec, std::uint64_t cap) {
    auto elements = enumerate_nc(p, cap);
    auto leq = kernels::relation_matrix(
        elements.size(), [&](std::size_t a, std::size_t b) { return refines(elements[a], elements[b]); }, exec);
    std::vector<int> rank;
    rank.reserve(elements.size());
    for (const auto& pi : elements) rank.push_back(rank_of(pi, p));
    FinitePoset order(std::move(leq), std::move(rank));
    if (!order.is_graded()) throw InvariantError("refinement poset is not graded by n - bl");
    return {std::move(elements), std::move(order)};
}

Integer count_rank_multichains(const FinitePoset& poset, const std::vector<int>& targets) {
    for (std::size_t i = 1; i < targets.size(); ++i) {
        if (targets[i] < targets[i - 1]) throw ParameterError("rank targets must be weakly increasing");
    }
    if (targets.empty()) return 1;
    std::vector<Integer> ways(poset.size(), 0);
    for (std::size_t x : poset.elements_of_rank(targets[0])) ways[x] = 1;
    for (std::size_t i = 1; i < targets.size(); ++i) {
        std::vector<Integer> next(poset.size(), 0);
        for (std::size_t y : poset.elements_of_rank(targets[i])) {
            for (std::size_t x : poset.elements_of_rank(targets[i - 1])) {
                if (ways[x] != 0 && poset.leq(x, y)) next[y] += ways[x];
            }
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (std::size_t x : poset.elements_of_rank(targets.back())) total += ways[x];
    return total;
}

Integer count_maximal_chains(const FinitePoset& poset) {
    if (poset.size() == 0) return 0;
    std::vector<std::vector<std::size_t>> lower_covers(poset.size());
    for (auto [a, b] : poset.cover_relations()) lower_covers[b].push_back(a);
    std::vector<Integer> ways(poset.size(), 0);
    for (int r = 0; r <= poset.max_rank(); ++r) {
        for (std::size_t y : poset.elements_of_rank(r)) {
            if (r == 0) {
                ways[y] = 1;
                continue;
            }
            for (std::size_t x : lower_covers[y]) ways[y] += ways[x];
        }
    }
    Integer total = 0;
    for (std::size_t x : poset.elements_of_rank(poset.max_rank())) total += ways[x];
    return total;
}

Integer zeta_brute(const FinitePoset& poset, int l) {
    if (l < 1) throw ParameterError("zeta_brute: l must be >= 1");
    if (l == 1) return 1;
    std::vector<Integer> ways(poset.size(), 1);
    for (int step = 2; step < l; ++step) {
        std::vector<Integer> next(poset.size(), 0);
        for (std::size_t y = 0; y < poset.size(); ++y) {
            const auto& down = poset.down_set(y);
            for (auto x = down.find_first(); x != BitRow::npos; x = down.find_next(x)) next[y] += ways[x];
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

bool verify_ideal_embedding(const Params& p, std::uint64_t cap) {
    const auto members = enumerate_nc(p, cap);
    const auto classical = enumerate_classical_nc(p.m, p.n, cap);
    std::set<SetPartition> image;
    for (const auto& pi : members) image.insert(tilde_transform(pi, p.t));
    const std::set<SetPartition> ambient(classical.begin(), classical.end());
    for (const auto& tau : image) {
        if (!ambient.count(tau)) return false;
        for (const auto& sigma : classical) {
            if (refines(sigma, tau) && !image.count(sigma)) return false;
        }
    }
    for (const auto& a : members) {
        for (const auto& b : members) {
            if (refines(a, b) != refines(tilde_transform(a, p.t), tilde_transform(b, p.t))) return false;
        }
    }
    return true;
}

} // namespace nclab
