#pragma once

#include <json.hpp>

#include "cliquepack/multipartite.hpp"
#include "cliquepack/packing.hpp"
#include "cliquepack/symmetrization.hpp"

// JSON forms of the library's results. Rationals are always "num/den" strings.
namespace cliquepack {

using Json = nlohmann::ordered_json;

/// { "r": int, "cliques": [[v...]...], "weights": ["num/den"...] }
Json to_json(const FractionalPacking& p);
/// Throws ParseError on a malformed document.
FractionalPacking packing_from_json(const Json& doc);

Json to_json(const SymmetrizationTrace& trace);
Json to_json(const PackingScalars& s);
Json to_json(const TheoremReport& report);
Json to_json(const AbcExample& ex);
Json to_json(const MultipartiteProfile& profile);

}  // namespace cliquepack
