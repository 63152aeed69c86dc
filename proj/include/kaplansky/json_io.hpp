#pragma once

#include <string>

#include <json.hpp>

#include "kaplansky/group_ring.hpp"
#include "kaplansky/search.hpp"

namespace kaplansky {

/// Term array [[i, j, k, c], ...] sorted lexicographically by (i, j, k),
/// coefficients in [1, d).
nlohmann::json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const nlohmann::json& j, PrimeChar d);

/// Element object {"characteristic": d, "p": <terms>, "q": ..., "r": ...,
/// "s": ...}; the single interchange format of the command-line tool.
nlohmann::json element_to_json(const GroupRingElem& u);
GroupRingElem element_from_json(const nlohmann::json& j);

/// Display-only aligned text rendering.
std::string element_to_text(const GroupRingElem& u);

/// Result file {"meta": {characteristic, box, strategy, hit_count},
/// "hits": [<element>, ...]}; content is fully determined by the inputs, so
/// identical searches serialize byte-identically.
nlohmann::json search_result_to_json(const SearchResult& result, const SearchBox& box);

} // namespace kaplansky
