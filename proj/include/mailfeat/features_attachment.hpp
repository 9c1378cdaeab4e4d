#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <utility>

#include "catalog.hpp"
#include "detail/ascii.hpp"
#include "eml.hpp"

namespace mailfeat {

struct AttachmentFeatures {
    std::size_t count = 0;
    std::size_t unique_content_types = 0;

    bool operator==(const AttachmentFeatures&) const = default;
};

inline AttachmentFeatures extract_attachment_features(std::span<const AttachmentInfo> attachments)
{
    std::unordered_set<std::string> types;
    for (const auto& a : attachments)
        types.insert(detail::lower_ascii(a.content_type));
    return {attachments.size(), types.size()};
}

inline void extract_attachment_features(std::span<const AttachmentInfo> attachments, const Selection& selection,
                                        FeatureValues& out)
{
    const auto a = extract_attachment_features(attachments);
    if (selection.contains(fid("A01")))
        out[fid("A01")] = static_cast<double>(a.count);
    if (selection.contains(fid("A02")))
        out[fid("A02")] = static_cast<double>(a.unique_content_types);
}

} // namespace mailfeat
