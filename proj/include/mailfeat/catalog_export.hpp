#pragma once

// Machine- and human-readable dumps of the feature catalog.

#include <sstream>
#include <string>

#include <json.hpp>

#include "catalog.hpp"

namespace mailfeat {

/// features.json: [{id, name, group, value_kind, listing, row, variant}, ...] in column order.
inline nlohmann::json catalog_to_json(const FeatureCatalog& catalog = full_catalog())
{
    auto arr = nlohmann::json::array();
    for (const auto& d : catalog.defs()) {
        arr.push_back({{"id", d.id},
                       {"name", d.name},
                       {"group", group_name(d.group)},
                       {"value_kind", value_kind_name(d.value_kind)},
                       {"listing", listing_name(d.listing)},
                       {"row", d.row},
                       {"variant", d.variant}});
    }
    return arr;
}

/// Markdown feature dictionary (docs/features.md is generated from this).
inline std::string catalog_markdown(const FeatureCatalog& catalog = full_catalog())
{
    std::ostringstream out;
    out << "# Feature dictionary\n\n"
        << "Generated by `mailfeat catalog --markdown`. Columns appear in the CSV in this order.\n"
        << "`Source` gives the listing and row the feature transcribes.\n\n"
        << "| ID | Name | Group | Kind | Source |\n"
        << "|----|------|-------|------|--------|\n";
    for (const auto& d : catalog.defs()) {
        out << "| " << d.id << " | " << d.name << " | " << group_name(d.group) << " | "
            << value_kind_name(d.value_kind) << " | " << listing_name(d.listing) << " row " << d.row;
        if (!d.variant.empty())
            out << ", " << d.variant;
        out << " |\n";
    }
    return out.str();
}

} // namespace mailfeat
