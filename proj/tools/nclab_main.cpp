#include "nclab/closedform.hpp"
#include "nclab/dyckmodel.hpp"
#include "nclab/errors.hpp"
#include "nclab/jobs.hpp"
#include "nclab/jsonio.hpp"
#include "nclab/polyalg.hpp"
#include "nclab/posetcore.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace nclab;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Common {
    int m = 1;
    int n = 1;
    int t = 1;
    std::string variant = "paper";
    bool serial = false;
    std::uint64_t max_objects = 0;

    Params params() const { return Params(m, n, t); }
    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

std::uint64_t cap_from_env() {
    const char* raw = std::getenv("NC_LAB_MAX_OBJECTS");
    if (raw == nullptr || *raw == '\0') return kDefaultObjectCap;
    std::uint64_t value = 0;
    std::istringstream in(raw);
    if (!(in >> value) || !in.eof() || value == 0) {
        throw ParameterError(std::string("NC_LAB_MAX_OBJECTS must be a positive integer, got '") + raw + "'");
    }
    return value;
}

// --max-objects wins over NC_LAB_MAX_OBJECTS, which wins over the default.
std::uint64_t object_cap(const Common& c) { return c.max_objects != 0 ? c.max_objects : cap_from_env(); }

JobOptions job_options(const Common& c) { return JobOptions{parse_variant(c.variant), c.exec(), object_cap(c)}; }

void add_params(CLI::App* app, Common& c, bool need_m = true) {
    auto* m = app->add_option("--m", c.m, "divisibility m")->check(CLI::PositiveNumber);
    if (need_m) m->required();
    app->add_option("--n", c.n, "size n")->required()->check(CLI::PositiveNumber);
    app->add_option("--t", c.t, "parabolic parameter t")->required()->check(CLI::PositiveNumber);
}

void add_run_flags(CLI::App* app, Common& c) {
    app->add_option("--variant", c.variant, "complement variant for geometric chains")
        ->check(CLI::IsMember({"paper", "adapted"}));
    app->add_flag("--serial", c.serial, "use the serial reference kernels");
    app->add_option("--max-objects", c.max_objects, "object cap (overrides NC_LAB_MAX_OBJECTS)")
        ->check(CLI::PositiveNumber);
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_enumerate(const Common& c, const std::string& kind) {
    const Params p = c.params();
    if (kind == "nc") {
        for (const auto& pi : enumerate_nc(p, object_cap(c))) print(to_json(pi));
    } else if (kind == "nn") {
        for (const auto& chain : enumerate_nn(p, parse_variant(c.variant), c.exec(), object_cap(c))) print(to_json(chain));
    } else {
        if (total_count(Params(1, p.n, p.t)) > object_cap(c)) throw ResourceError("path enumeration exceeds the object cap");
        for (const auto& path : enumerate_tdyck(p.n, p.t)) print(to_json(path, p.t));
    }
    return 0;
}

Json count_row(const Integer& formula, const Integer& brute) {
    return Json{{"formula", to_decimal(formula)}, {"brute", to_decimal(brute)}, {"match", formula == brute}};
}

int cmd_count(const Common& c, const std::string& by) {
    const Params p = c.params();
    const auto elements = enumerate_nc(p, object_cap(c));
    Json out = to_json(p);
    out["by"] = by;
    bool all = true;
    if (by == "total") {
        const Json row = count_row(total_count(p), Integer(static_cast<unsigned long>(elements.size())));
        all = row["match"].get<bool>();
        for (const auto& [k, v] : row.items()) out[k] = v;
    } else if (by == "rank") {
        std::vector<Integer> census(static_cast<std::size_t>(p.max_rank() + 1), 0);
        for (const auto& pi : elements) census[static_cast<std::size_t>(rank_of(pi, p))] += 1;
        Json rows = Json::array();
        for (int s = 0; s <= p.max_rank(); ++s) {
            Json row{{"rank", s}};
            row.update(count_row(count_by_rank(p, s), census[static_cast<std::size_t>(s)]));
            all = all && row["match"].get<bool>();
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
    } else {
        std::map<BlockProfile, Integer> census;
        for (const auto& pi : elements) census[block_profile(pi, p)] += 1;
        Json rows = Json::array();
        for (const auto& b : all_profiles(p.n)) {
            const auto it = census.find(b);
            Json row{{"profile", b.counts}};
            row.update(count_row(count_by_profile(p, b), it == census.end() ? Integer(0) : it->second));
            all = all && row["match"].get<bool>();
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
    }
    out["all_match"] = all;
    print(out);
    return all ? 0 : kExitMismatch;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParameterError("--ranks expects non-negative integers, got '" + item + "'");
        }
    }
    if (out.empty()) throw ParameterError("--ranks must not be empty");
    return out;
}

int cmd_chains(const Common& c, const std::string& ranks) {
    const Params p = c.params();
    RankVector s{parse_list(ranks)};
    const auto sum = std::accumulate(s.s.begin(), s.s.end(), std::int64_t{0});
    if (sum > p.max_rank()) throw ParameterError("rank increments exceed n - t");
    // A short list leaves the remainder to the last increment.
    if (sum < p.max_rank()) s.s.push_back(p.max_rank() - sum);
    if (s.chain_length() < 1) throw ParameterError("--ranks needs at least two increments summing to n - t");
    const auto poset = build_refinement_poset(p, c.exec(), object_cap(c));
    const Integer formula = multichain_count_formula(p, s);
    const Integer brute = count_rank_multichains(poset.order, s.targets());
    Json out = to_json(p);
    out["ranks"] = s.s;
    out.update(count_row(formula, brute));
    print(out);
    return formula == brute ? 0 : kExitMismatch;
}

int cmd_triangle(const Common& c, const std::string& which, const std::string& source) {
    const Params p = c.params();
    Polynomial poly;
    if (which == "m") {
        poly = source == "brute" ? m_triangle_brute(p, c.exec(), object_cap(c)) : m_triangle_closed(p);
    } else if (which == "f") {
        poly = f_triangle_closed(p);
    } else if (which == "h") {
        poly = h_triangle_closed(p);
    } else {
        poly = h_tilde(p, parse_variant(c.variant), c.exec(), object_cap(c));
    }
    print(to_json(poly));
    return 0;
}

int cmd_verify(const Common& c, const std::string& suite, const std::string& range) {
    const auto rows = run_sweep(suite, parse_range(range), job_options(c), Exec::serial);
    std::size_t passed = 0;
    std::cout << std::left << std::setw(12) << "suite" << std::right << std::setw(3) << "m" << std::setw(3) << "n"
              << std::setw(3) << "t" << "  result\n";
    for (const auto& row : rows) {
        std::cout << std::left << std::setw(12) << row.check << std::right << std::setw(3) << row.params.m
                  << std::setw(3) << row.params.n << std::setw(3) << row.params.t << "  "
                  << (row.pass ? "PASS" : "FAIL") << '\n';
        if (row.pass) ++passed;
    }
    std::cout << passed << "/" << rows.size() << " passed\n";
    return passed == rows.size() ? 0 : kExitMismatch;
}

int cmd_sweep(const Common& c, const std::string& check, const std::string& range, const std::string& format) {
    const auto rows = run_sweep(check, parse_range(range), job_options(c), c.exec());
    bool all = true;
    if (format == "csv") std::cout << "m,n,t,check,pass\n";
    for (const auto& row : rows) {
        all = all && row.pass;
        if (format == "csv") {
            std::cout << row.params.m << ',' << row.params.n << ',' << row.params.t << ',' << row.check << ','
                      << (row.pass ? "true" : "false") << '\n';
        } else {
            print(to_json(row));
        }
    }
    return all ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification for parabolic m-divisible non-crossing partitions"};
    app.require_subcommand(1);

    Common c;
    std::string kind = "nc";
    std::string by = "total";
    std::string ranks;
    std::string which;
    std::string source = "closed";
    std::string suite;
    std::string range;
    std::string format = "json";

    auto* enumerate = app.add_subcommand("enumerate", "stream objects as JSON lines");
    add_params(enumerate, c, false);
    add_run_flags(enumerate, c);
    enumerate->add_option("--kind", kind, "nc, nn or dyck")->check(CLI::IsMember({"nc", "nn", "dyck"}));

    auto* count = app.add_subcommand("count", "formula against brute-force census");
    add_params(count, c);
    add_run_flags(count, c);
    count->add_option("--by", by, "rank, profile or total")->check(CLI::IsMember({"rank", "profile", "total"}));

    auto* chains = app.add_subcommand("chains", "multi-chains with prescribed rank increments");
    add_params(chains, c);
    add_run_flags(chains, c);
    chains->add_option("--ranks", ranks, "s1,s2,... (a missing last increment is filled in)")->required();

    auto* triangle = app.add_subcommand("triangle", "emit an M, F, H or H-tilde triangle as JSON");
    add_params(triangle, c);
    add_run_flags(triangle, c);
    triangle->add_option("--which", which, "m, f, h or htilde")
        ->required()
        ->check(CLI::IsMember({"m", "f", "h", "htilde"}));
    triangle->add_option("--source", source, "closed or brute (M only)")->check(CLI::IsMember({"closed", "brute"}));

    auto* verify = app.add_subcommand("verify", "pass/fail table over a parameter range");
    add_run_flags(verify, c);
    verify->add_option("--suite", suite, "identities, conj-count, conj-h, bijection or lemma54")
        ->required()
        ->check(CLI::IsMember({"identities", "conj-count", "conj-h", "bijection", "lemma54"}));
    verify->add_option("--range", range, "grid such as m=1,n=2..6,t=1..n")->required();

    auto* sweep = app.add_subcommand("sweep", "run any check over a parameter grid");
    add_run_flags(sweep, c);
    sweep->add_option("--check", suite, "check name")->required()->check(CLI::IsMember(check_names()));
    sweep->add_option("--range", range, "grid such as m=1..3,n=1..5,t=1..n,mn<=8")->required();
    sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(c, kind);
        if (*count) return cmd_count(c, by);
        if (*chains) return cmd_chains(c, ranks);
        if (*triangle) return cmd_triangle(c, which, source);
        if (*verify) return cmd_verify(c, suite, range);
        if (*sweep) return cmd_sweep(c, suite, range, format);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
