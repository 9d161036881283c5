#include "nclab/jsonio.hpp"

#include "nclab/errors.hpp"

namespace nclab {

Json to_json(const SetPartition& pi) {
    Json j;
    j["n"] = pi.ground_size();
    j["blocks"] = pi.blocks();
    return j;
}

Json to_json(const Polynomial& poly) {
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms()) {
        Json t;
        t["x"] = e.first;
        t["y"] = e.second;
        t["c"] = to_decimal(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const FilterChain& chain) {
    Json filters = Json::array();
    for (const auto& f : chain.components()) {
        Json pairs = Json::array();
        for (const auto& q : f.members()) pairs.push_back(Json::array({q.i, q.j}));
        filters.push_back(std::move(pairs));
    }
    Json j;
    j["m"] = chain.m();
    j["filters"] = std::move(filters);
    return j;
}

Json to_json(const DyckPath& path, int t) {
    Json j;
    j["n"] = path.semilength();
    j["t"] = t;
    j["steps"] = path.steps();
    return j;
}

Json to_json(const Params& p) {
    Json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["t"] = p.t;
    return j;
}

SetPartition partition_from_json(const Json& j) {
    try {
        return SetPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
    } catch (const Json::exception& e) {
        throw ParameterError(std::string("malformed partition JSON: ") + e.what());
    }
}

Polynomial polynomial_from_json(const Json& j) {
    try {
        Polynomial out;
        for (const auto& t : j.at("terms")) {
            out.add_term(t.at("x").get<int>(), t.at("y").get<int>(), parse_rational(t.at("c").get<std::string>()));
        }
        return out;
    } catch (const Json::exception& e) {
        throw ParameterError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

FilterChain chain_from_json(const Json& j, int n, int t) {
    try {
        std::vector<TFilter> components;
        for (const auto& f : j.at("filters")) {
            PairSet pairs;
            for (const auto& q : f) pairs.insert({q.at(0).get<int>(), q.at(1).get<int>()});
            components.push_back(TFilter::from_pairs(n, t, pairs));
        }
        FilterChain chain(std::move(components));
        if (chain.m() != j.at("m").get<int>()) throw ParameterError("chain JSON: m disagrees with the filter count");
        return chain;
    } catch (const Json::exception& e) {
        throw ParameterError(std::string("malformed chain JSON: ") + e.what());
    }
}

} // namespace nclab
