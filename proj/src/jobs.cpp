#include "nclab/jobs.hpp"

#include "nclab/closedform.hpp"
#include "nclab/dyckmodel.hpp"
#include "nclab/errors.hpp"
#include "nclab/polyalg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace nclab {

namespace {

int parse_int(const std::string& text, const std::string& context) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParameterError("bad integer '" + text + "' in " + context);
    return value;
}

// A bound is a literal or the name "n", resolved per triple.
struct Bound {
    std::optional<int> literal;
    int resolve(int n) const { return literal ? *literal : n; }
};

struct Interval {
    Bound lo;
    Bound hi;
};

Bound parse_bound(const std::string& text, bool allow_n, const std::string& key) {
    if (text == "n") {
        if (!allow_n) throw ParameterError("range key '" + key + "' cannot refer to n");
        return Bound{};
    }
    return Bound{parse_int(text, "range key '" + key + "'")};
}

Interval parse_interval(const std::string& text, bool allow_n, const std::string& key) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Bound b = parse_bound(text, allow_n, key);
        return {b, b};
    }
    return {parse_bound(text.substr(0, dots), allow_n, key), parse_bound(text.substr(dots + 2), allow_n, key)};
}

Json polynomial_pair(const Polynomial& brute, const Polynomial& closed) {
    Json j;
    j["brute"] = to_json(brute);
    j["closed"] = to_json(closed);
    return j;
}

CheckRow check_count(const Params& p, const JobOptions& o) {
    const Integer brute(static_cast<unsigned long>(enumerate_nc(p, o.cap).size()));
    const Integer formula = total_count(p);
    CheckRow row{p, "count", brute == formula, Json::object()};
    row.detail["formula"] = to_decimal(formula);
    row.detail["brute"] = to_decimal(brute);
    return row;
}

CheckRow check_ranks(const Params& p, const JobOptions& o) {
    std::vector<Integer> census(static_cast<std::size_t>(p.max_rank() + 1), 0);
    for (const auto& pi : enumerate_nc(p, o.cap)) census[static_cast<std::size_t>(rank_of(pi, p))] += 1;
    CheckRow row{p, "ranks", true, Json::object()};
    Json rows = Json::array();
    for (int s = 0; s <= p.max_rank(); ++s) {
        const Integer formula = count_by_rank(p, s);
        const bool match = formula == census[static_cast<std::size_t>(s)];
        row.pass = row.pass && match;
        rows.push_back({{"rank", s},
                        {"formula", to_decimal(formula)},
                        {"brute", to_decimal(census[static_cast<std::size_t>(s)])},
                        {"match", match}});
    }
    row.detail["rows"] = std::move(rows);
    return row;
}

CheckRow check_profiles(const Params& p, const JobOptions& o) {
    std::map<BlockProfile, Integer> census;
    for (const auto& pi : enumerate_nc(p, o.cap)) census[block_profile(pi, p)] += 1;
    CheckRow row{p, "profiles", true, Json::object()};
    Json rows = Json::array();
    std::size_t seen = 0;
    for (const auto& b : all_profiles(p.n)) {
        const Integer formula = count_by_profile(p, b);
        const auto it = census.find(b);
        const Integer brute = it == census.end() ? Integer(0) : it->second;
        if (it != census.end()) ++seen;
        const bool match = formula == brute;
        row.pass = row.pass && match;
        rows.push_back(
            {{"profile", b.counts}, {"formula", to_decimal(formula)}, {"brute", to_decimal(brute)}, {"match", match}});
    }
    // A census profile missing from all_profiles would be an enumeration bug.
    if (seen != census.size()) row.pass = false;
    row.detail["rows"] = std::move(rows);
    return row;
}

CheckRow check_mtriangle(const Params& p, const JobOptions& o) {
    const Polynomial brute = m_triangle_brute(p, o.exec, o.cap);
    const Polynomial closed = m_triangle_closed(p);
    return CheckRow{p, "mtriangle", brute == closed, polynomial_pair(brute, closed)};
}

CheckRow check_identities(const Params& p, const JobOptions&) {
    CheckRow row{p, "identities", true, Json::object()};
    try {
        const auto report = verify_transformation_identities(p);
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name}, {"holds", c.holds}, {"required", c.required}});
        }
        row.pass = report.all_hold();
        row.detail["checks"] = std::move(checks);
        row.detail["h_from_m_prefactor"] = report.h_from_m_prefactor;
        row.detail["nonnegative"] = true;
    } catch (const InvariantError& e) {
        // F and H closed forms refuse negative or fractional coefficients.
        row.pass = false;
        row.detail["nonnegative"] = false;
        row.detail["error"] = e.what();
    }
    return row;
}

CheckRow check_conj_count(const Params& p, const JobOptions& o) {
    const Integer brute(static_cast<unsigned long>(enumerate_nn(p, o.variant, o.exec, o.cap).size()));
    const Integer formula = total_count(p);
    CheckRow row{p, "conj-count", brute == formula, Json::object()};
    row.detail["variant"] = to_string(o.variant);
    row.detail["formula"] = to_decimal(formula);
    row.detail["nn"] = to_decimal(brute);
    return row;
}

CheckRow check_conj_h(const Params& p, const JobOptions& o) {
    const Polynomial tilde = h_tilde(p, o.variant, o.exec, o.cap);
    const Polynomial closed = h_triangle_closed(p);
    CheckRow row{p, "conj-h", tilde == closed, Json::object()};
    row.detail["variant"] = to_string(o.variant);
    row.detail["h_tilde"] = to_json(tilde);
    row.detail["closed"] = to_json(closed);
    return row;
}

CheckRow check_bijection(const Params& p, const JobOptions& o) {
    if (p.m != 1) throw ParameterError("the bijection check needs m = 1");
    const auto filters = enumerate_t_filters(p.n, p.t);
    const auto paths = enumerate_tdyck(p.n, p.t);
    CheckRow row{p, "bijection", true, Json::object()};
    auto fail = [&row](const std::string& key, bool ok) {
        row.detail[key] = ok;
        row.pass = row.pass && ok;
    };

    std::vector<DyckPath> images;
    images.reserve(filters.size());
    bool round_trip = true;
    for (const auto& v : filters) {
        images.push_back(theta(v));
        round_trip = round_trip && theta_inverse(images.back(), p.t) == v;
    }
    for (const auto& path : paths) round_trip = round_trip && theta(theta_inverse(path, p.t)) == path;
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    auto expected = paths;
    std::sort(expected.begin(), expected.end());
    fail("onto_paths", sorted == expected);
    fail("round_trip", round_trip);

    bool order = true;
    for (std::size_t a = 0; a < filters.size() && order; ++a) {
        for (std::size_t b = 0; b < filters.size(); ++b) {
            if (filters[a].is_subset_of(filters[b]) != ddom_leq(images[a], images[b])) {
                order = false;
                break;
            }
        }
    }
    fail("order_isomorphism", order);
    fail("path_count", Integer(static_cast<unsigned long>(paths.size())) == total_count(p));

    const Polynomial via_paths = h_via_paths(p.n, p.t);
    const Polynomial via_nn = h_tilde(p, o.variant, o.exec, o.cap);
    const Polynomial closed = h_triangle_closed(p);
    fail("paths_eq_h_tilde", via_paths == via_nn);
    fail("paths_eq_closed", via_paths == closed);
    return row;
}

CheckRow check_lemma54(const Params& p, const JobOptions& o) {
    const auto poset = nn_poset(p, o.variant, o.exec, o.cap);
    CheckRow row{p, "lemma54", poset.cover_violations.empty(), Json::object()};
    row.detail["variant"] = to_string(o.variant);
    row.detail["covers"] = poset.covers.size();
    row.detail["violations"] = poset.cover_violations;
    return row;
}

} // namespace

std::vector<Params> parse_range(const std::string& text) {
    std::optional<Interval> m_range;
    std::optional<Interval> n_range;
    std::optional<Interval> t_range;
    std::optional<int> mn_limit;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.rfind("mn<=", 0) == 0) {
            mn_limit = parse_int(item.substr(4), "range term 'mn<='");
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParameterError("range term '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "m") {
            m_range = parse_interval(value, false, key);
        } else if (key == "n") {
            n_range = parse_interval(value, false, key);
        } else if (key == "t") {
            t_range = parse_interval(value, true, key);
        } else {
            throw ParameterError("unknown range key '" + key + "'");
        }
    }
    if (!n_range) throw ParameterError("range '" + text + "' must give n");
    const Interval ms = m_range.value_or(Interval{Bound{1}, Bound{1}});
    const Interval ts = t_range.value_or(Interval{Bound{1}, Bound{}});

    std::vector<Params> out;
    for (int m = ms.lo.resolve(0); m <= ms.hi.resolve(0); ++m) {
        for (int n = n_range->lo.resolve(0); n <= n_range->hi.resolve(0); ++n) {
            if (mn_limit && m * n > *mn_limit) continue;
            for (int t = ts.lo.resolve(n); t <= ts.hi.resolve(n); ++t) out.emplace_back(m, n, t);
        }
    }
    if (out.empty()) throw ParameterError("range '" + text + "' is empty");
    return out;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"count",     "ranks",      "profiles", "mtriangle", "identities",
                                                "conj-count", "conj-h", "bijection", "lemma54"};
    return names;
}

CheckRow run_check(const std::string& check, const Params& p, const JobOptions& options) {
    if (check == "count") return check_count(p, options);
    if (check == "ranks") return check_ranks(p, options);
    if (check == "profiles") return check_profiles(p, options);
    if (check == "mtriangle") return check_mtriangle(p, options);
    if (check == "identities") return check_identities(p, options);
    if (check == "conj-count") return check_conj_count(p, options);
    if (check == "conj-h") return check_conj_h(p, options);
    if (check == "bijection") return check_bijection(p, options);
    if (check == "lemma54") return check_lemma54(p, options);
    throw ParameterError("unknown check '" + check + "'");
}

std::vector<CheckRow> run_sweep(const std::string& check, const std::vector<Params>& grid, const JobOptions& options,
                                Exec sweep_exec) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), check) == names.end()) throw ParameterError("unknown check '" + check + "'");
    return kernels::map_indexed<CheckRow>(
        grid.size(), [&](std::size_t k) { return run_check(check, grid[k], options); }, sweep_exec);
}

Json to_json(const CheckRow& row) {
    Json j;
    j["m"] = row.params.m;
    j["n"] = row.params.n;
    j["t"] = row.params.t;
    j["check"] = row.check;
    j["pass"] = row.pass;
    j["detail"] = row.detail;
    return j;
}

} // namespace nclab
