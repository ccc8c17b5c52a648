#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twh/datum.hpp"
#include "twh/hecke.hpp"

namespace twh {

using Json = nlohmann::json;

// Parsed datum file: a torus section, a Hecke section, or both.
struct DatumFile {
    std::string name;
    std::string preset;  // empty unless expanded from a preset
    std::optional<BernsteinDatum> datum;
    std::optional<RootDatum> hecke;
};

// Throws ValidationError on schema violations, invalid maps and failed cocycle identities.
DatumFile datum_from_json(const Json& j, std::size_t max_group_order = 10000);
DatumFile datum_from_text(const std::string& text, std::size_t max_group_order = 10000);
DatumFile datum_from_file(const std::string& path, std::size_t max_group_order = 10000);

// Canonical form: keys sorted, rationals as "p/q", cocycles as full tables over the group's
// element numbering. Reloading reproduces the same group numbering.
Json datum_to_json(const DatumFile& f);

Json map_to_json(const AffineLatticeMap& m);
AffineLatticeMap map_from_json(const Json& j, std::size_t rank);
Json point_to_json(const TorusPoint& x);
// "p/q,p/q,..." in (Q/Z)^d
TorusPoint parse_point(const std::string& text);
std::string point_str(const TorusPoint& x);

struct PresetInfo {
    std::string name;
    std::string description;
};
std::vector<PresetInfo> preset_list();
// k is used by the Hecke preset only. Throws ValidationError for an unknown name.
DatumFile load_preset(const std::string& name, const Rat& k = Rat(1));

}  // namespace twh
