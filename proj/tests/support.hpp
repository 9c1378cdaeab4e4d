#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <mailfeat/eml.hpp>

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path test_dir() { return fs::path(MAILFEAT_TEST_DIR); }
inline fs::path corpus_dir() { return test_dir() / "fixtures" / "corpus"; }

inline std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json load_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

inline nlohmann::json addresses_json(const std::vector<mailfeat::Address>& addrs)
{
    auto arr = nlohmann::json::array();
    for (const auto& a : addrs)
        arr.push_back({a.display_name, a.addr_spec, a.is_malformed});
    return arr;
}

inline nlohmann::json parts_json(const mailfeat::EmailParts& p)
{
    auto atts = nlohmann::json::array();
    for (const auto& a : p.attachments)
        atts.push_back({a.filename ? nlohmann::json(*a.filename) : nlohmann::json(nullptr), a.content_type,
                        a.size_bytes});
    return {{"from", addresses_json(p.from_addr)},
            {"to", addresses_json(p.to_addrs)},
            {"cc", addresses_json(p.cc_addrs)},
            {"bcc", addresses_json(p.bcc_addrs)},
            {"subject", p.subject},
            {"text_body", p.text_body},
            {"html_body", p.html_body},
            {"attachments", atts}};
}

/// Parses one fixture and returns a description of every field that differs
/// from the expectation; empty when it matches.
inline std::vector<std::string> check_fixture(const std::string& rel, const nlohmann::json& expected)
{
    std::vector<std::string> problems;
    const auto bytes = slurp(corpus_dir() / rel);
    const bool want_malformed = expected.value("malformed", false);
    try {
        const auto email = mailfeat::parse_eml(bytes);
        if (want_malformed)
            return {rel + ": parsed, expected MalformedMessage"};
        const auto got = parts_json(email.parts);
        for (const auto& [key, value] : expected.items())
            if (got.at(key) != value)
                problems.push_back(rel + ": " + key + " = " + got.at(key).dump() + ", expected " + value.dump());
    } catch (const mailfeat::MalformedMessage& e) {
        if (!want_malformed)
            problems.push_back(rel + ": MalformedMessage: " + e.what());
    }
    return problems;
}

} // namespace testsupport
