#include "poset_142.hpp"

#include "nclab/closedform.hpp"
#include "nclab/errors.hpp"
#include "nclab/jsonio.hpp"
#include "nclab/nonnest.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace nclab;

namespace {

PairSet all_pairs(int n, int t) {
    PairSet s;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j > t) s.insert({i, j});
        }
    }
    return s;
}

bool up_closed_by_definition(const PairSet& v, int n) {
    for (const auto& q : v) {
        for (int k = 1; k <= q.i; ++k) {
            for (int l = q.j; l <= n; ++l) {
                if (v.count({k, l}) == 0) return false;
            }
        }
    }
    return true;
}

std::vector<PairSet> filters_by_definition(int n, int t) {
    const PairSet pool = all_pairs(n, t);
    const std::vector<PairIJ> universe(pool.begin(), pool.end());
    std::vector<PairSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        PairSet s;
        for (std::size_t b = 0; b < universe.size(); ++b) {
            if ((mask >> b) & 1U) s.insert(universe[b]);
        }
        if (up_closed_by_definition(s, n)) out.push_back(s);
    }
    return out;
}

bool subset(const PairSet& a, const PairSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PairSet minus(const PairSet& a, const PairSet& b) {
    PairSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// v[k-1] = V_k. Checks every index pair up to 2m + 1, with V_k = V_m past m.
bool geometric_by_definition(const std::vector<PairSet>& v, int n, int t, ComplementVariant variant) {
    const int m = static_cast<int>(v.size());
    auto at = [&](int k) -> const PairSet& { return v[static_cast<std::size_t>(std::min(k, m) - 1)]; };
    for (int i = 1; i <= 2 * m + 1; ++i) {
        for (int j = 1; j <= 2 * m + 1; ++j) {
            if (!subset(setwise_sum(at(i), at(j)), at(i + j))) return false;
        }
    }
    const PairSet universe = variant == ComplementVariant::paper ? all_pairs(n, 1) : all_pairs(n, t);
    for (int i = 1; i < m; ++i) {
        for (int j = 1; i + j <= m; ++j) {
            const PairSet lhs = setwise_sum(minus(universe, at(i)), minus(universe, at(j)));
            if (!subset(lhs, minus(universe, at(i + j)))) return false;
        }
    }
    return true;
}

// Nested tuples as (V_1, ..., V_m), filtered by the definition.
std::vector<std::vector<PairSet>> nn_by_definition(const Params& p, ComplementVariant variant) {
    const auto filters = filters_by_definition(p.n, p.t);
    std::vector<std::vector<PairSet>> out;
    std::vector<PairSet> v;
    std::function<void()> rec = [&] {
        if (static_cast<int>(v.size()) == p.m) {
            if (geometric_by_definition(v, p.n, p.t, variant)) out.push_back(v);
            return;
        }
        for (const auto& f : filters) {
            if (!v.empty() && !subset(f, v.back())) continue;
            v.push_back(f);
            rec();
            v.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<PairSet>> as_sets(const std::vector<FilterChain>& chains) {
    std::vector<std::vector<PairSet>> out;
    for (const auto& c : chains) {
        std::vector<PairSet> v;
        for (int k = 1; k <= c.m(); ++k) v.push_back(c.v(k).members());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairSet pairs(std::initializer_list<PairIJ> list) { return PairSet(list); }

} // namespace

TEST_CASE("formal sums and the triangular order") {
    CHECK(formal_sum({1, 3}, {3, 5}) == PairIJ{1, 5});
    CHECK_FALSE(formal_sum({3, 5}, {1, 3}).has_value());
    CHECK(setwise_sum(pairs({{1, 2}, {2, 3}}), pairs({{2, 4}, {3, 4}})) == pairs({{1, 4}, {2, 4}}));
    CHECK(setwise_sum({}, pairs({{1, 2}})).empty());
    CHECK(precedes({2, 3}, {1, 4}));
    CHECK_FALSE(precedes({1, 3}, {2, 4}));
}

TEST_CASE("TriangularPoset layout") {
    const TriangularPoset tri(5);
    CHECK(tri.size() == 10);
    CHECK(std::popcount(tri.above(3)) == 7);
    const auto mask = tri.to_mask(pairs({{2, 3}}));
    CHECK(tri.to_set(tri.up_closure(mask)) == pairs({{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    CHECK(tri.to_set(tri.minimal_elements(tri.all())) == pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    CHECK(tri.to_set(tri.sum(tri.to_mask(pairs({{1, 2}, {1, 3}})), tri.to_mask(pairs({{2, 5}, {3, 4}})))) ==
          pairs({{1, 4}, {1, 5}}));
    CHECK_THROWS_AS(TriangularPoset(12), ParameterError);
    CHECK_THROWS_AS(tri.index({3, 3}), DomainError);
}

TEST_CASE("t-filters match the definition") {
    for (int n = 1; n <= 5; ++n) {
        for (int t = 1; t <= n; ++t) {
            std::vector<PairSet> got;
            for (const auto& f : enumerate_t_filters(n, t)) got.push_back(f.members());
            std::sort(got.begin(), got.end());
            auto expected = filters_by_definition(n, t);
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
        }
    }
    // Filters of T_{n,t} are counted by the m = 1 total.
    for (int n = 1; n <= 8; ++n) {
        for (int t = 1; t <= n; ++t) {
            CHECK(Integer(static_cast<unsigned long>(enumerate_t_filters(n, t).size())) == total_count(Params(1, n, t)));
        }
    }
    CHECK_THROWS_AS(TFilter::from_pairs(4, 2, pairs({{1, 2}})), DomainError);
    CHECK_THROWS_AS(TFilter::from_pairs(4, 2, pairs({{2, 4}})), DomainError);
    CHECK_NOTHROW(TFilter::from_pairs(4, 2, pairs({{1, 4}, {2, 4}})));
}

TEST_CASE("FilterChain nesting and clamping") {
    const auto small = TFilter::from_pairs(4, 2, pairs({{1, 4}}));
    const auto big = TFilter::from_pairs(4, 2, pairs({{1, 4}, {2, 4}}));
    const FilterChain c({small, big});
    CHECK(c.m() == 2);
    CHECK(c.v(1) == big);
    CHECK(c.v(2) == small);
    CHECK(c.v(7) == small);
    CHECK(c.total_size() == 3);
    CHECK_THROWS_AS(FilterChain({big, small}), DomainError);
    CHECK_THROWS_AS(FilterChain({}), DomainError);
    CHECK_THROWS_AS(c.v(0), ParameterError);
}

TEST_CASE("geometric chains: pruned, reference and definition agree") {
    for (auto variant : {ComplementVariant::paper, ComplementVariant::adapted}) {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 4; ++n) {
                for (int t = 1; t <= n; ++t) {
                    const Params p(m, n, t);
                    CAPTURE(to_string(variant));
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(t);
                    const auto serial = enumerate_nn(p, variant, Exec::serial);
                    CHECK(serial == enumerate_nn(p, variant, Exec::parallel));
                    CHECK(as_sets(serial) == as_sets(enumerate_nn_reference(p, variant)));
                    CHECK(as_sets(serial) == nn_by_definition(p, variant));
                }
            }
        }
    }
}

TEST_CASE("the two complement variants on (2,3,2)") {
    CHECK(enumerate_nn(Params(2, 3, 2), ComplementVariant::paper).size() == 5);
    CHECK(enumerate_nn(Params(2, 3, 2), ComplementVariant::adapted).size() == 6);
    CHECK(parse_variant("adapted") == ComplementVariant::adapted);
    CHECK_THROWS_AS(parse_variant("other"), ParameterError);
}

TEST_CASE("for m = 1 every t-filter is geometric") {
    for (int n = 1; n <= 7; ++n) {
        for (int t = 1; t <= n; ++t) {
            CHECK(enumerate_nn(Params(1, n, t)).size() == enumerate_t_filters(n, t).size());
        }
    }
}

TEST_CASE("the nine-element poset for (1,4,2) with its floor labels") {
    const auto poset = nn_poset(Params(1, 4, 2));
    CHECK(poset_142::mismatches(poset).empty());
    CHECK(poset.cover_violations.empty());
    CHECK(h_tilde(poset, 4, 2) == h_triangle_closed(Params(1, 4, 2)));
}

TEST_CASE("covers change one component by one pair, m <= 3, n <= 5") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 5; ++n) {
            for (int t = 1; t <= n; ++t) CHECK(nn_poset(Params(m, n, t)).cover_violations.empty());
        }
    }
}

TEST_CASE("H-tilde of the (2,3,2) chains") {
    CHECK(h_tilde(Params(2, 3, 2)) == h_triangle_closed(Params(2, 3, 2)));
    const auto rows = verify_conjectures({Params(2, 3, 2), Params(3, 3, 2)});
    for (const auto& r : rows) {
        CHECK(r.count_matches);
        CHECK(r.h_matches);
    }
    const auto adapted = verify_conjectures({Params(2, 3, 2)}, ComplementVariant::adapted);
    CHECK_FALSE(adapted.front().count_matches);
}

TEST_CASE("chain JSON") {
    const auto chains = enumerate_nn(Params(2, 3, 2));
    for (const auto& c : chains) CHECK(chain_from_json(to_json(c), 3, 2) == c);
    const FilterChain c({TFilter::from_pairs(3, 2, pairs({{1, 3}})), TFilter::from_pairs(3, 2, pairs({{1, 3}, {2, 3}}))});
    CHECK(to_json(c).dump() == R"({"m":2,"filters":[[[1,3]],[[1,3],[2,3]]]})");
    CHECK_THROWS_AS(enumerate_nn(Params(3, 5, 1), ComplementVariant::paper, Exec::serial, 10), ResourceError);
}
