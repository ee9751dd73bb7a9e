#pragma once

#include <string>

#include <json.hpp>

#include "chainpart/online.hpp"
#include "chainpart/poset.hpp"
#include "chainpart/regular.hpp"

namespace chainpart {

using Json = nlohmann::json;

/// {"n": n, "relations": [[i, j], ...]}. Covers only unless `closed`, in
/// which case every strict pair is listed and "closed": true is set.
Json poset_to_json(const Poset& poset, bool closed = false);
/// Closes the listed relations. Throws BadParameterError on a malformed
/// document and the Poset construction errors on bad relations.
Poset poset_from_json(const Json& j);

/// Poset fields plus "presentation" and "width_bound".
Json online_instance_to_json(const OnlineInstance& instance, bool closed = false);
OnlineInstance online_instance_from_json(const Json& j);

/// {"poset": {...}, "antichains": [[ids], ...], "w": w}.
Json regular_instance_to_json(const RegularInstance& instance, bool closed = false);
RegularInstance regular_instance_from_json(const Json& j);

/// {"count": k, "chain_of": [c_0, ...]}.
Json partition_to_json(const ChainPartition& partition);

/// Throws IoError when the file cannot be read or is not valid JSON.
Json read_json_file(const std::string& path);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace chainpart
