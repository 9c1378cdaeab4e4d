#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "eml.hpp"
#include "features_attachment.hpp"
#include "features_body.hpp"
#include "features_header.hpp"
#include "lexical.hpp"
#include "lexicon.hpp"
#include "readability.hpp"

namespace mailfeat {

/// Immutable data shared by every extraction: word lists and the domain table.
struct ExtractionContext {
    Lexicons lexicons;
    DomainKeywordTable domains = DomainKeywordTable::defaults();
};

/// Computes every selected feature; unselected slots stay 0.
inline FeatureValues extract_features(const ParsedEmail& email, const Selection& selection,
                                      const ExtractionContext& ctx)
{
    FeatureValues values{};
    extract_header_features(email, selection, ctx.domains, values);
    if (selection.any_in(FeatureGroup::Body) || selection.any_in(FeatureGroup::Readability) ||
        selection.any_in(FeatureGroup::Lexical)) {
        const auto at = make_analysis_text(email.parts);
        extract_body_features(email.parts, at, ctx.lexicons, selection, values);
        extract_readability_features(at.tk, ctx.lexicons.stopwords, selection, values);
        extract_lexical_features(at.lower_tokens, selection, values);
    }
    extract_attachment_features(email.parts.attachments, selection, values);
    return values;
}

struct FeatureVector {
    std::string email_id;
    std::vector<std::pair<std::string, double>> values; // (feature id, value) in selection order
    std::optional<std::string> label;
};

inline FeatureVector make_feature_vector(std::string email_id, const FeatureValues& values,
                                         const Selection& selection, std::optional<std::string> label = {})
{
    FeatureVector fv{std::move(email_id), {}, std::move(label)};
    for (const auto* def : selection.defs()) {
        const auto idx = static_cast<std::size_t>(def - full_catalog().defs().data());
        fv.values.emplace_back(std::string(def->id), values[idx]);
    }
    return fv;
}

} // namespace mailfeat
