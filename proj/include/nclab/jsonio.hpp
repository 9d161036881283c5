#pragma once

#include "nclab/dyckmodel.hpp"
#include "nclab/ncpart.hpp"
#include "nclab/nonnest.hpp"
#include "nclab/polyalg.hpp"

#include <json.hpp>

namespace nclab {

using Json = nlohmann::ordered_json;

// {"n": N, "blocks": [[...], ...]} with N the ground-set size.
Json to_json(const SetPartition& pi);
// {"terms": [{"x": ex, "y": ey, "c": "p/q"}, ...]} sorted by (ex, ey).
Json to_json(const Polynomial& poly);
// {"m": m, "filters": [[[i, j], ...], ...]}, V_m first.
Json to_json(const FilterChain& chain);
// {"n": n, "t": t, "steps": "UU..."}
Json to_json(const DyckPath& path, int t);
Json to_json(const Params& p);

SetPartition partition_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
FilterChain chain_from_json(const Json& j, int n, int t);

} // namespace nclab
