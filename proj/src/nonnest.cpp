#include "nclab/nonnest.hpp"

#include "nclab/closedform.hpp"
#include "nclab/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nclab {

std::optional<PairIJ> formal_sum(PairIJ a, PairIJ b) {
    if (a.j != b.i) return std::nullopt;
    return PairIJ{a.i, b.j};
}

PairSet setwise_sum(const PairSet& a, const PairSet& b) {
    PairSet out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (auto s = formal_sum(x, y)) out.insert(*s);
        }
    }
    return out;
}

bool precedes(PairIJ a, PairIJ b) { return a.i >= b.i && a.j <= b.j; }

// ---------------------------------------------------------------------------

TriangularPoset::TriangularPoset(int n) : n_(n) {
    if (n < 1 || n > kMaxN) {
        throw ParameterError("triangular poset supports 1 <= n <= " + std::to_string(kMaxN) + ", got " + std::to_string(n));
    }
    index_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            index_[static_cast<std::size_t>(i * (n + 1) + j)] = static_cast<int>(pairs_.size());
            pairs_.push_back({i, j});
        }
    }
    all_ = pairs_.size() == 64 ? ~Mask{0} : ((Mask{1} << pairs_.size()) - 1);
    starting_at_.assign(static_cast<std::size_t>(n + 1), 0);
    upper_covers_.assign(pairs_.size(), 0);
    lower_covers_.assign(pairs_.size(), 0);
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
        const auto [i, j] = pairs_[b];
        starting_at_[static_cast<std::size_t>(i)] |= Mask{1} << b;
        if (i > 1) upper_covers_[b] |= Mask{1} << index({i - 1, j});
        if (j < n) upper_covers_[b] |= Mask{1} << index({i, j + 1});
        if (i + 1 < j) {
            lower_covers_[b] |= Mask{1} << index({i + 1, j});
            lower_covers_[b] |= Mask{1} << index({i, j - 1});
        }
    }
}

int TriangularPoset::index(PairIJ p) const {
    if (p.i < 1 || p.j > n_ || p.i >= p.j) {
        throw DomainError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") is not in T_" + std::to_string(n_));
    }
    return index_[static_cast<std::size_t>(p.i * (n_ + 1) + p.j)];
}

TriangularPoset::Mask TriangularPoset::above(int t) const {
    Mask out = 0;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
        if (pairs_[b].j > t) out |= Mask{1} << b;
    }
    return out;
}

TriangularPoset::Mask TriangularPoset::to_mask(const PairSet& s) const {
    Mask out = 0;
    for (const auto& p : s) out |= Mask{1} << index(p);
    return out;
}

PairSet TriangularPoset::to_set(Mask mask) const {
    PairSet out;
    for (; mask != 0; mask &= mask - 1) out.insert(pairs_[static_cast<std::size_t>(std::countr_zero(mask))]);
    return out;
}

TriangularPoset::Mask TriangularPoset::sum(Mask a, Mask b) const {
    Mask out = 0;
    for (; a != 0; a &= a - 1) {
        const auto [i, j] = pairs_[static_cast<std::size_t>(std::countr_zero(a))];
        for (Mask rest = b & starting_at_[static_cast<std::size_t>(j)]; rest != 0; rest &= rest - 1) {
            const int l = pairs_[static_cast<std::size_t>(std::countr_zero(rest))].j;
            out |= Mask{1} << index({i, l});
        }
    }
    return out;
}

bool TriangularPoset::is_up_closed(Mask mask) const {
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
        if ((upper_covers_[static_cast<std::size_t>(std::countr_zero(rest))] & ~mask) != 0) return false;
    }
    return true;
}

TriangularPoset::Mask TriangularPoset::minimal_elements(Mask mask) const {
    Mask out = 0;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
        const int b = std::countr_zero(rest);
        if ((lower_covers_[static_cast<std::size_t>(b)] & mask) == 0) out |= Mask{1} << b;
    }
    return out;
}

TriangularPoset::Mask TriangularPoset::up_closure(Mask mask) const {
    Mask closed = mask;
    for (Mask frontier = mask; frontier != 0;) {
        Mask next = 0;
        for (; frontier != 0; frontier &= frontier - 1) next |= upper_covers_[static_cast<std::size_t>(std::countr_zero(frontier))];
        frontier = next & ~closed;
        closed |= next;
    }
    return closed;
}

// ---------------------------------------------------------------------------

TFilter::TFilter(int n, int t, Mask bits) : n_(n), t_(t), bits_(bits) {
    const TriangularPoset tri(n);
    if (t < 1 || t > n) throw ParameterError("t-filter needs 1 <= t <= n");
    if ((bits & ~tri.above(t)) != 0) throw DomainError("t-filter contains a pair (i,j) with j <= t");
    if (!tri.is_up_closed(bits)) throw DomainError("t-filter is not up-closed");
}

TFilter TFilter::from_pairs(int n, int t, const PairSet& pairs) { return TFilter(n, t, TriangularPoset(n).to_mask(pairs)); }

int TFilter::size() const { return std::popcount(bits_); }

bool TFilter::contains(PairIJ p) const { return ((bits_ >> TriangularPoset(n_).index(p)) & 1U) != 0; }

PairSet TFilter::members() const { return TriangularPoset(n_).to_set(bits_); }

PairSet TFilter::minimal_elements() const {
    const TriangularPoset tri(n_);
    return tri.to_set(tri.minimal_elements(bits_));
}

FilterChain::FilterChain(std::vector<TFilter> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("filter chain needs m >= 1 components");
    for (std::size_t k = 1; k < components_.size(); ++k) {
        if (components_[k].n() != n() || components_[k].t() != t()) throw DomainError("filter chain mixes parameters");
        if (!components_[k - 1].is_subset_of(components_[k])) throw DomainError("filter chain is not weakly nested");
    }
}

const TFilter& FilterChain::v(int k) const {
    if (k < 1) throw ParameterError("filter chain index must be >= 1");
    const int clamped = std::min(k, m());
    return components_[static_cast<std::size_t>(m() - clamped)];
}

int FilterChain::total_size() const {
    int s = 0;
    for (const auto& f : components_) s += f.size();
    return s;
}

bool FilterChain::is_subset_of(const FilterChain& o) const {
    if (o.m() != m()) return false;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (!components_[k].is_subset_of(o.components_[k])) return false;
    }
    return true;
}

std::string to_string(ComplementVariant v) { return v == ComplementVariant::paper ? "paper" : "adapted"; }

ComplementVariant parse_variant(const std::string& text) {
    if (text == "paper") return ComplementVariant::paper;
    if (text == "adapted") return ComplementVariant::adapted;
    throw ParameterError("unknown complement variant '" + text + "' (expected paper|adapted)");
}

namespace {

using Mask = TriangularPoset::Mask;

// Checks both geometric conditions restricted to index pairs whose smaller
// index is `level`. `v[k]` holds V_k for k = level..m (v[0] unused).
bool geometric_at_level(const TriangularPoset& tri, Mask universe, const std::vector<Mask>& v, int m, int level) {
    for (int j = level; j <= m; ++j) {
        const Mask target = v[static_cast<std::size_t>(std::min(level + j, m))];
        if ((tri.sum(v[static_cast<std::size_t>(level)], v[static_cast<std::size_t>(j)]) & ~target) != 0) return false;
        if ((tri.sum(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(level)]) & ~target) != 0) return false;
    }
    for (int j = level; level + j <= m; ++j) {
        const Mask a = universe & ~v[static_cast<std::size_t>(level)];
        const Mask b = universe & ~v[static_cast<std::size_t>(j)];
        const Mask c = universe & ~v[static_cast<std::size_t>(level + j)];
        if ((tri.sum(a, b) & ~c) != 0 || (tri.sum(b, a) & ~c) != 0) return false;
    }
    return true;
}

Mask complement_universe(const TriangularPoset& tri, int t, ComplementVariant variant) {
    return variant == ComplementVariant::paper ? tri.all() : tri.above(t);
}

FilterChain make_chain(int n, int t, const std::vector<Mask>& v, int m) {
    std::vector<TFilter> components;
    for (int k = m; k >= 1; --k) components.emplace_back(n, t, v[static_cast<std::size_t>(k)]);
    return FilterChain(std::move(components));
}

} // namespace

bool is_geometric(const FilterChain& chain, ComplementVariant variant) {
    const TriangularPoset tri(chain.n());
    const int m = chain.m();
    std::vector<Mask> v(static_cast<std::size_t>(m + 1), tri.all());
    for (int k = 1; k <= m; ++k) v[static_cast<std::size_t>(k)] = chain.v(k).bits();
    const Mask universe = complement_universe(tri, chain.t(), variant);
    for (int level = 1; level <= m; ++level) {
        if (!geometric_at_level(tri, universe, v, m, level)) return false;
    }
    return true;
}

std::vector<TFilter> enumerate_t_filters(int n, int t) {
    if (t < 1 || t > n) throw ParameterError("enumerate_t_filters needs 1 <= t <= n");
    const TriangularPoset tri(n);
    // Larger pairs first, so both upper covers are decided before a pair is.
    std::vector<int> order;
    for (int b = 0; b < tri.size(); ++b) {
        if (tri.pair(b).j > t) order.push_back(b);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return tri.pair(a).j - tri.pair(a).i > tri.pair(b).j - tri.pair(b).i;
    });
    std::vector<Mask> found;
    auto rec = [&](auto&& self, std::size_t pos, Mask chosen) -> void {
        if (pos == order.size()) {
            found.push_back(chosen);
            return;
        }
        const Mask bit = Mask{1} << order[pos];
        self(self, pos + 1, chosen);
        if (tri.is_up_closed(chosen | bit)) self(self, pos + 1, chosen | bit);
    };
    rec(rec, 0, 0);
    std::sort(found.begin(), found.end());
    std::vector<TFilter> out;
    out.reserve(found.size());
    for (Mask f : found) out.emplace_back(n, t, f);
    return out;
}

std::vector<FilterChain> enumerate_nn(const Params& p, ComplementVariant variant, Exec exec, std::uint64_t cap) {
    const TriangularPoset tri(p.n);
    const auto filters = enumerate_t_filters(p.n, p.t);
    const Mask universe = complement_universe(tri, p.t, variant);
    const int m = p.m;

    // One independent branch per choice of V_m.
    auto branch = [&](std::size_t top) {
        std::vector<FilterChain> out;
        std::vector<Mask> v(static_cast<std::size_t>(m + 1), tri.all());
        v[static_cast<std::size_t>(m)] = filters[top].bits();
        auto rec = [&](auto&& self, int level) -> void {
            if (!geometric_at_level(tri, universe, v, m, level)) return;
            if (level == 1) {
                if (out.size() >= cap) throw ResourceError("geometric chain enumeration exceeded the object cap");
                out.push_back(make_chain(p.n, p.t, v, m));
                return;
            }
            const Mask above = v[static_cast<std::size_t>(level)];
            for (const auto& f : filters) {
                if ((above & ~f.bits()) != 0) continue;
                v[static_cast<std::size_t>(level - 1)] = f.bits();
                self(self, level - 1);
            }
        };
        rec(rec, m);
        return out;
    };

    auto parts = kernels::map_indexed<std::vector<FilterChain>>(filters.size(), branch, exec);
    std::vector<FilterChain> all;
    for (auto& part : parts) {
        for (auto& c : part) all.push_back(std::move(c));
        if (all.size() > cap) throw ResourceError("geometric chain enumeration exceeded the object cap");
    }
    return all;
}

std::vector<FilterChain> enumerate_nn_reference(const Params& p, ComplementVariant variant, std::uint64_t cap) {
    const auto filters = enumerate_t_filters(p.n, p.t);
    std::vector<FilterChain> out;
    // Indices into `filters` for V_m, ..., V_1.
    std::vector<std::size_t> pick(static_cast<std::size_t>(p.m), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == pick.size()) {
            std::vector<TFilter> comps;
            for (auto k : pick) comps.push_back(filters[k]);
            FilterChain chain(std::move(comps));
            if (is_geometric(chain, variant)) {
                if (out.size() >= cap) throw ResourceError("reference enumeration exceeded the object cap");
                out.push_back(std::move(chain));
            }
            return;
        }
        for (std::size_t k = 0; k < filters.size(); ++k) {
            if (pos > 0 && !filters[pick[pos - 1]].is_subset_of(filters[k])) continue;
            pick[pos] = k;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

PairSet fl(const FilterChain& lower, const FilterChain& upper) {
    const auto& w = upper.components().front();
    const auto& v = lower.components().front();
    return TriangularPoset(w.n()).to_set(w.bits() & ~v.bits());
}

PairSet minimal_pairs(int n, int t) {
    PairSet out;
    for (int i = t; i < n; ++i) out.insert({i, i + 1});
    return out;
}

NnPoset nn_poset(const Params& p, ComplementVariant variant, Exec exec, std::uint64_t cap) {
    auto elements = enumerate_nn(p, variant, exec, cap);
    auto leq = kernels::relation_matrix(
        elements.size(), [&](std::size_t a, std::size_t b) { return elements[a].is_subset_of(elements[b]); }, exec);
    std::vector<int> rank;
    rank.reserve(elements.size());
    for (const auto& c : elements) rank.push_back(c.total_size());
    FinitePoset order(std::move(leq), std::move(rank));

    NnPoset out{std::move(elements), std::move(order), {}, {}, {}};
    out.floors.assign(out.elements.size(), {});
    for (auto [a, b] : out.order.cover_relations()) {
        const auto& lower = out.elements[a];
        const auto& upper = out.elements[b];
        int changed = 0;
        int difference = 0;
        for (std::size_t k = 0; k < lower.components().size(); ++k) {
            const auto gain = std::popcount(upper.components()[k].bits() & ~lower.components()[k].bits());
            if (gain != 0) ++changed;
            difference += gain;
        }
        if (changed != 1 || difference != 1) {
            out.cover_violations.push_back("cover " + std::to_string(a) + " -> " + std::to_string(b) + " changes " +
                                           std::to_string(changed) + " components by " + std::to_string(difference) +
                                           " pairs");
        }
        NnCover cover{a, b, fl(lower, upper)};
        out.floors[b].insert(cover.label.begin(), cover.label.end());
        out.covers.push_back(std::move(cover));
    }
    return out;
}

Polynomial h_tilde(const NnPoset& poset, int n, int t) {
    const PairSet s = minimal_pairs(n, t);
    Polynomial out;
    for (const auto& floor : poset.floors) {
        const auto on_s = std::count_if(floor.begin(), floor.end(), [&](const PairIJ& q) { return s.count(q) != 0; });
        out.add_term(static_cast<int>(floor.size()), static_cast<int>(on_s), 1);
    }
    return out;
}

Polynomial h_tilde(const Params& p, ComplementVariant variant, Exec exec, std::uint64_t cap) {
    return h_tilde(nn_poset(p, variant, exec, cap), p.n, p.t);
}

std::vector<ConjectureRow> verify_conjectures(const std::vector<Params>& params, ComplementVariant variant, Exec exec,
                                              std::uint64_t cap) {
    std::vector<ConjectureRow> rows;
    for (const auto& p : params) {
        const auto poset = nn_poset(p, variant, exec, cap);
        ConjectureRow row;
        row.params = p;
        row.chain_count = static_cast<unsigned long>(poset.elements.size());
        row.predicted_count = total_count(p);
        row.count_matches = row.chain_count == row.predicted_count;
        row.h_tilde = h_tilde(poset, p.n, p.t);
        row.h_closed = h_triangle_closed(p);
        row.h_matches = row.h_tilde == row.h_closed;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nclab
