#pragma once

// JSON schemas for sequences, witnesses, search checkpoints and results.
// Sequence documents look like
//   {"group":[2,2,4],"elements":[[[0,0,1],3],[[1,1,0],2]]}
// with elements sorted lexicographically; dump(to_json(parse(x))) == x for
// every document produced by to_json.

#include <json.hpp>

#include "zerosum/families.hpp"
#include "zerosum/search.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

using Json = nlohmann::ordered_json;

Json to_json(const GroupElement& g);
GroupElement element_from_json(const GroupSpec& G, const Json& j);

Json to_json(const GroupSpec& G);
GroupSpec group_from_json(const Json& j);

Json to_json(const Sequence& S);
Sequence sequence_from_json(const Json& j);

Json to_json(const FamilyWitness& w);
/// Declared basis orders are recovered from the generators.
FamilyWitness witness_from_json(const GroupSpec& G, const Json& j);

Json to_json(const SearchCheckpoint& cp);
SearchCheckpoint checkpoint_from_json(const Json& j);

Json to_json(const ConstantResult& r);

/// Parses text; throws FormatError on malformed input.
Json parse_json(std::string_view text);

/// "2,2,4" -> GroupSpec({2,2,4}).
GroupSpec parse_group(std::string_view text);

}  // namespace zerosum
