#include "nclab/closedform.hpp"
#include "nclab/dyckmodel.hpp"
#include "nclab/errors.hpp"
#include "nclab/jsonio.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nclab;

namespace {

PairSet pairs(std::initializer_list<PairIJ> list) { return PairSet(list); }

// All words over {U, D} of length 2n, kept if they are t-Dyck paths.
std::vector<std::string> tdyck_by_definition(int n, int t) {
    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1U << (2 * n)); ++mask) {
        std::string w;
        int h = 0;
        bool ok = true;
        for (int k = 0; k < 2 * n && ok; ++k) {
            const bool up = ((mask >> (2 * n - 1 - k)) & 1U) == 0;
            w += up ? 'U' : 'D';
            h += up ? 1 : -1;
            ok = h >= 0 && (k >= t || up);
        }
        if (ok && h == 0) out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("DyckPath validation") {
    CHECK_NOTHROW(DyckPath("UUDD"));
    CHECK_THROWS_AS(DyckPath("UDDU"), DomainError);
    CHECK_THROWS_AS(DyckPath("UUD"), DomainError);
    CHECK_THROWS_AS(DyckPath("UXDD"), DomainError);
    CHECK(DyckPath("UUDD").heights() == std::vector<int>{0, 1, 2, 1, 0});
    CHECK(DyckPath("UUDD").is_t_dyck(2));
    CHECK_FALSE(DyckPath("UDUD").is_t_dyck(2));
}

TEST_CASE("enumeration matches brute force over all step words") {
    for (int n = 1; n <= 8; ++n) {
        for (int t = 1; t <= n; ++t) {
            std::vector<std::string> got;
            for (const auto& p : enumerate_tdyck(n, t)) got.push_back(p.steps());
            CHECK(got == tdyck_by_definition(n, t));
            CHECK(Integer(static_cast<unsigned long>(got.size())) == total_count(Params(1, n, t)));
        }
    }
    CHECK(enumerate_tdyck(4, 2).size() == 9);
    CHECK(enumerate_tdyck(3, 1).size() == 5);
    CHECK(enumerate_tdyck(5, 5).front().steps() == "UUUUUDDDDD");
    CHECK_THROWS_AS(enumerate_tdyck(3, 4), ParameterError);
}

TEST_CASE("path statistics") {
    const auto top = path_stats(DyckPath("UUUUDDDD"));
    CHECK(top.valleys == 0);
    CHECK(top.peaks == 1);
    CHECK(top.zero_valleys == 0);
    CHECK(top.length == 8);
    const auto low = path_stats(DyckPath("UUDDUDUD"));
    CHECK(low.valleys == 2);
    CHECK(low.zero_valleys == 2);
    CHECK(low.peaks == 3);
    const auto mid = path_stats(DyckPath("UUDUDUDD"));
    CHECK(mid.valleys == 2);
    CHECK(mid.zero_valleys == 0);
    CHECK(DyckPath("UUDUDUDD").valleys() == std::vector<std::pair<int, int>>{{3, 1}, {5, 1}});
    for (const auto& p : enumerate_tdyck(6, 2)) {
        const auto s = path_stats(p);
        CHECK(s.peaks == s.valleys + 1);
        CHECK(s.zero_valleys <= s.valleys);
    }
}

TEST_CASE("theta on the (4,2) reference elements") {
    CHECK(theta(TFilter::from_pairs(4, 2, {})).steps() == "UUUUDDDD");
    const auto top = TFilter::from_pairs(4, 2, pairs({{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(theta(top).steps() == "UUDDUDUD");
    CHECK(theta(top).valleys() == std::vector<std::pair<int, int>>{{4, 0}, {6, 0}});
    const auto middle = TFilter::from_pairs(4, 2, pairs({{1, 3}, {1, 4}, {2, 4}}));
    CHECK(theta(middle).steps() == "UUDUDUDD");
    CHECK(theta_inverse(DyckPath("UUDUDUDD"), 2) == middle);
    CHECK_THROWS_AS(theta_inverse(DyckPath("UDUD"), 2), DomainError);
}

TEST_CASE("theta is an order isomorphism onto t-Dyck paths, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (int t = 1; t <= n; ++t) {
            const auto filters = enumerate_t_filters(n, t);
            std::vector<DyckPath> images;
            for (const auto& v : filters) {
                images.push_back(theta(v));
                CHECK(theta_inverse(images.back(), t) == v);
            }
            auto sorted = images;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == enumerate_tdyck(n, t));
            for (std::size_t a = 0; a < filters.size(); ++a) {
                for (std::size_t b = 0; b < filters.size(); ++b) {
                    REQUIRE(filters[a].is_subset_of(filters[b]) == ddom_leq(images[a], images[b]));
                }
            }
        }
    }
}

TEST_CASE("dual domination") {
    const auto paths = enumerate_tdyck(4, 2);
    const DyckPath highest("UUUUDDDD");
    const DyckPath lowest("UUDDUDUD");
    for (const auto& p : paths) {
        CHECK(ddom_leq(highest, p));
        CHECK(ddom_leq(p, lowest));
        CHECK(ddom_leq(p, p));
    }
    CHECK_THROWS_AS(ddom_leq(DyckPath("UD"), DyckPath("UUDD")), DomainError);
}

TEST_CASE("H via paths equals H-tilde and the closed form") {
    CHECK(h_via_paths(4, 2) == h_triangle_closed(Params(1, 4, 2)));
    CHECK(h_via_paths(5, 5) == Polynomial(1));
    for (int n = 1; n <= 9; ++n) {
        for (int t = 1; t <= n; ++t) {
            const Params p(1, n, t);
            CHECK(h_via_paths(n, t) == h_triangle_closed(p));
            if (n <= 7) CHECK(h_via_paths(n, t) == h_tilde(p));
        }
    }
}

TEST_CASE("path JSON") {
    CHECK(to_json(DyckPath("UUDDUDUD"), 2).dump() == R"({"n":4,"t":2,"steps":"UUDDUDUD"})");
}
