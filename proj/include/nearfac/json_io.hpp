#pragma once

#include <string>

#include <json.hpp>

#include "nearfac/enumerate.hpp"
#include "nearfac/graph.hpp"
#include "nearfac/near_factorization.hpp"
#include "nearfac/sedf.hpp"

namespace nearfac {

using Json = nlohmann::json;

// {"group": "D:8", "A": [0, 1, 8], "B": [...], "A_text": ["e", "b", "a"], "B_text": [...]}
Json to_json(const NearFactorization& nf);
// Accepts codes or element strings in "A" and "B"; the *_text fields are ignored.
// DomainError naming the offending entry on malformed input.
NearFactorization nf_from_json(const Json& j);

Json element_set_json(const FiniteGroup& g, const ElementSet& set);
ElementSet element_set_from_json(const FiniteGroup& g, const Json& j, const std::string& what);

Json to_json(const VerificationReport& r, const FiniteGroup& g);
Json to_json(const EquivalenceMap& m);
Json to_json(const CriticalReport& r);
Json to_json(const EnumerationResult& r);
Json to_json(const SweepEntry& e);

// {"group": "Z:16", "sets": [[...], [...]], "lambdas": [1, 1]}
Json to_json(const GsedfInstance& inst);
GsedfInstance gsedf_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace nearfac
