#pragma once

#include "nclab/jsonio.hpp"
#include "nclab/kernels.hpp"
#include "nclab/ncpart.hpp"
#include "nclab/nonnest.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nclab {

// Parses a grid such as "m=1,n=2..6,t=1..n" or "m=1..3,n=1..5,t=1..n,mn<=8".
// Keys: m (default 1), n (required), t (default 1..n); bounds of t may name n.
// The optional "mn<=K" term drops larger triples. Result is in (m, n, t) order.
std::vector<Params> parse_range(const std::string& text);

// Names accepted by run_check:
//   count       |enumerate_nc| against the total-count formula
//   ranks       rank census against the rank formula
//   profiles    block-profile census against the profile formula
//   mtriangle   Möbius-sum M-triangle against its closed form
//   identities  the six substitution identities and F/H non-negativity
//   conj-count  |NN| against the total-count formula
//   conj-h      H-tilde from NN against the closed H-triangle
//   bijection   theta against t-Dyck paths (m must be 1)
//   lemma54     every NN cover changes one component by one pair
const std::vector<std::string>& check_names();

struct JobOptions {
    ComplementVariant variant = ComplementVariant::paper;
    Exec exec = Exec::parallel;
    std::uint64_t cap = kDefaultObjectCap;
};

struct CheckRow {
    Params params;
    std::string check;
    bool pass = false;
    Json detail; // check-specific evidence
};

// Throws ParameterError for an unknown check name, ResourceError on the cap.
CheckRow run_check(const std::string& check, const Params& p, const JobOptions& options);

// Runs the check over every triple. Exec::parallel fans triples out over the
// worker pool; rows come back in grid order either way.
std::vector<CheckRow> run_sweep(const std::string& check, const std::vector<Params>& grid, const JobOptions& options,
                                Exec sweep_exec);

Json to_json(const CheckRow& row);

} // namespace nclab
