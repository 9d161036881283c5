#include "oracles.hpp"

#include "nclab/closedform.hpp"
#include "nclab/errors.hpp"
#include "nclab/ncpart.hpp"

#include <doctest.h>

using namespace nclab;

namespace {

SetPartition fourteen_point_example() { return SetPartition(14, {{1, 6, 7, 8}, {2, 9, 12, 13}, {3, 14}, {4, 5}, {10, 11}}); }

} // namespace

TEST_CASE("Params validation") {
    CHECK_NOTHROW(Params(1, 1, 1));
    CHECK_THROWS_AS(Params(0, 3, 1), ParameterError);
    CHECK_THROWS_AS(Params(1, 3, 0), ParameterError);
    CHECK_THROWS_AS(Params(1, 3, 4), ParameterError);
}

TEST_CASE("SetPartition canonical form and validation") {
    const SetPartition a(4, {{4, 2}, {3, 1}});
    CHECK(a.blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(a == SetPartition::from_labels({7, 5, 7, 5}));
    CHECK(a.same_block(1, 3));
    CHECK_FALSE(a.same_block(1, 2));
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(SetPartition(2, {{1, 2}, {}}), DomainError);
}

TEST_CASE("the 14-element example partition") {
    const auto pi = fourteen_point_example();
    const Params p(2, 7, 3);
    CHECK(is_t_partition(pi, 3));
    CHECK(is_noncrossing_t(pi, 3));
    CHECK(is_m_divisible(pi, 2));
    CHECK(is_member(pi, p));
    CHECK(rank_of(pi, p) == 2);
    const auto b = block_profile(pi, p);
    CHECK(b.counts == std::vector<std::int64_t>{3, 2, 0, 0, 0, 0, 0});
    CHECK(weight_signature(b).exponents == std::map<int, std::int64_t>{{1, 3}, {2, 2}});
    CHECK(tilde_transform(tilde_transform(pi, 3), 3) == pi);
}

TEST_CASE("t-partition and crossing edge cases") {
    const auto pair12 = SetPartition(4, {{1, 2}, {3, 4}});
    CHECK(is_t_partition(pair12, 1));
    CHECK_FALSE(is_t_partition(pair12, 2));
    CHECK_THROWS_AS(is_noncrossing_t(pair12, 2), DomainError);
    CHECK_THROWS_AS(is_t_partition(pair12, 5), ParameterError);
    // {1,3},{2,4} crosses classically; with t = 2 the pair 1,2 sits in the
    // "j <= t" regime, where the forbidden pattern is nested instead.
    const auto crossing = SetPartition(4, {{1, 3}, {2, 4}});
    CHECK_FALSE(is_noncrossing_t(crossing, 1));
    CHECK(is_noncrossing_t(crossing, 2));
    const auto nesting = SetPartition(4, {{1, 4}, {2, 3}});
    CHECK(is_noncrossing_t(nesting, 1));
    CHECK_FALSE(is_noncrossing_t(nesting, 2));
    CHECK_THROWS_AS(block_profile(SetPartition(3, {{1}, {2, 3}}), Params(2, 1, 1)), DomainError);
    CHECK_THROWS_AS(refines(SetPartition::singletons(2), SetPartition::singletons(3)), DomainError);
}

TEST_CASE("library crossing test matches the definition on every partition of [7]") {
    for (const auto& w : oracle::all_label_words(7)) {
        const auto pi = SetPartition::from_labels(w);
        for (int t = 1; t <= 7; ++t) {
            REQUIRE(is_t_partition(pi, t) == oracle::t_partition(w, t));
            if (oracle::t_partition(w, t)) REQUIRE(is_noncrossing_t(pi, t) == oracle::noncrossing_t(w, t));
        }
    }
}

TEST_CASE("enumerate_all_partitions gives the Bell numbers") {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_all_partitions(n).size() == bell[static_cast<std::size_t>(n)]);
}

TEST_CASE("classical enumeration gives the Fuss-Catalan numbers") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; m * n <= 12; ++n) {
            CHECK(Integer(static_cast<unsigned long>(enumerate_classical_nc(m, n).size())) == oracle::fuss_catalan(m, n));
        }
    }
}

TEST_CASE("enumerate_nc equals filtering all set partitions, mn <= 9") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; m * n <= 9; ++n) {
            for (int t = 1; t <= n; ++t) {
                const Params p(m, n, t);
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(t);
                CHECK(enumerate_nc(p) == oracle::nc_by_definition(p));
            }
        }
    }
}

TEST_CASE("refines matches the definition") {
    const auto all = enumerate_all_partitions(5);
    for (const auto& a : all) {
        for (const auto& b : all) REQUIRE(refines(a, b) == oracle::refines_by_definition(a, b));
    }
}

TEST_CASE("tilde is an involution mapping NC_{n,t} into the classical set") {
    const Params p(2, 4, 3);
    const auto classical = enumerate_classical_nc(2, 4);
    for (const auto& pi : enumerate_nc(p)) {
        const auto image = tilde_transform(pi, p.t);
        CHECK(std::binary_search(classical.begin(), classical.end(), image));
        CHECK(tilde_transform(image, p.t) == pi);
    }
}

TEST_CASE("all_profiles") {
    // Partitions of 4: 1111, 112, 22, 13, 4.
    CHECK(all_profiles(4).size() == 5);
    for (const auto& b : all_profiles(6)) CHECK(b.weighted_total() == 6);
}

TEST_CASE("object cap refuses large jobs up front") {
    CHECK_THROWS_AS(enumerate_nc(Params(1, 8, 1), 100), ResourceError);
    CHECK_THROWS_AS(enumerate_classical_nc(1, 8, 100), ResourceError);
}
