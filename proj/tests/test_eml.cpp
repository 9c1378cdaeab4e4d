#include <gtest/gtest.h>

#include <mailfeat/eml.hpp>

#include "support.hpp"

using namespace mailfeat;

namespace {

const char* minimal = "From: a@x.org\r\nTo: b@y.org\r\nSubject: hi\r\n\r\nbody";

}

TEST(ParseEml, MinimalMessage)
{
    const auto email = parse_eml(minimal);
    ASSERT_EQ(email.parts.from_addr.size(), 1u);
    EXPECT_EQ(email.parts.from_addr[0].display_name, "");
    EXPECT_EQ(email.parts.from_addr[0].addr_spec, "a@x.org");
    EXPECT_EQ(email.parts.subject, "hi");
    EXPECT_EQ(email.parts.text_body, "body");
    EXPECT_EQ(email.parts.html_body, "");
    EXPECT_TRUE(email.parts.attachments.empty());
}

TEST(ParseEml, AlternativeSplitsTextAndHtml)
{
    const auto email = parse_eml("Content-Type: multipart/alternative; boundary=b\n\n"
                                 "--b\nContent-Type: text/plain\n\nT\n"
                                 "--b\nContent-Type: text/html\n\n<p>T</p>\n--b--\n");
    EXPECT_EQ(email.parts.text_body, "T");
    EXPECT_EQ(email.parts.html_body, "<p>T</p>");
}

TEST(ParseEml, AttachmentFixtureHasTwoPngs)
{
    const auto email = parse_eml(testsupport::slurp(testsupport::corpus_dir() / "spam" / "f03_attach.eml"));
    ASSERT_EQ(email.parts.attachments.size(), 2u);
    EXPECT_EQ(email.parts.attachments[0].content_type, "image/png");
    EXPECT_EQ(email.parts.attachments[1].content_type, "image/png");
}

TEST(ParseEml, RejectsInputWithoutHeadersOrSeparator)
{
    EXPECT_THROW(parse_eml(""), MalformedMessage);
    EXPECT_THROW(parse_eml("Recei"), MalformedMessage);
    EXPECT_THROW(parse_eml("just some words\nand more"), MalformedMessage);
}

TEST(ParseEml, SkipsMboxEnvelopeLine)
{
    const auto email = parse_eml("From someone@x Mon Jan  1 00:00:00 2001\nSubject: s\n\nb");
    EXPECT_EQ(email.parts.subject, "s");
    EXPECT_EQ(email.parts.text_body, "b");
}

TEST(ParseEml, MissingContentTypeDefaultsToTextPlain)
{
    const auto email = parse_eml(minimal);
    EXPECT_EQ(email.mime_tree.content_type, "text/plain");
    EXPECT_FALSE(email.mime_tree.content_type_declared);
}

TEST(ParseEml, FoldedHeadersAreUnfolded)
{
    const auto email = parse_eml("Subject: one\r\n two\r\n\tthree\r\n\r\n");
    EXPECT_EQ(email.parts.subject, "one two\tthree");
}

TEST(ParseEml, ConcatenatesMultipleTextLeaves)
{
    const auto email = parse_eml("Content-Type: multipart/mixed; boundary=b\n\n"
                                 "--b\n\nfirst\n--b\n\nsecond\n--b--\n");
    EXPECT_EQ(email.parts.text_body, "first\nsecond");
}

TEST(ParseEml, MessageRfc822IsAnAttachmentAndNotRecursed)
{
    const auto email = parse_eml("Content-Type: multipart/mixed; boundary=b\n\n"
                                 "--b\nContent-Type: message/rfc822\n\nSubject: inner\n\ninner body\n--b--\n");
    ASSERT_EQ(email.parts.attachments.size(), 1u);
    EXPECT_EQ(email.parts.attachments[0].content_type, "message/rfc822");
    EXPECT_EQ(email.parts.text_body, "");
}

TEST(ParseEml, NonTextLeafInsideAlternativeIsNotAnAttachment)
{
    const auto email = parse_eml("Content-Type: multipart/alternative; boundary=b\n\n"
                                 "--b\nContent-Type: text/plain\n\nx\n"
                                 "--b\nContent-Type: application/json\n\n{}\n--b--\n");
    EXPECT_TRUE(email.parts.attachments.empty());
}

TEST(ParseEml, Rfc2231FilenameContinuation)
{
    const auto email = parse_eml("Content-Type: multipart/mixed; boundary=b\n\n"
                                 "--b\nContent-Type: application/pdf\n"
                                 "Content-Disposition: attachment; filename*0=\"long\"; filename*1=\"name.pdf\"\n"
                                 "\nx\n--b--\n");
    ASSERT_EQ(email.parts.attachments.size(), 1u);
    EXPECT_EQ(email.parts.attachments[0].filename, "longname.pdf");
}

TEST(ParseEml, RunawayNestingIsBounded)
{
    std::string msg;
    for (int i = 0; i < 100; ++i)
        msg += "Content-Type: multipart/mixed; boundary=b" + std::to_string(i) + "\n\n--b" + std::to_string(i) + "\n";
    msg += "\nleaf\n";
    EXPECT_NO_THROW(parse_eml(msg));
}

TEST(HeaderValue, CaseInsensitiveLookup)
{
    const auto email = parse_eml(minimal);
    EXPECT_EQ(header_value(email, "Subject"), "hi");
    EXPECT_EQ(header_value(email, "subject"), "hi");
    EXPECT_FALSE(header_value(email, "X-Mailman-Version").has_value());
}

TEST(HeaderValue, FirstOccurrenceWinsAndAllAreRetained)
{
    const auto email = parse_eml("Received: one\nReceived: two\n\n");
    EXPECT_EQ(header_value(email, "received"), "one");
    EXPECT_EQ(header_values(email, "Received"), (std::vector<std::string>{"one", "two"}));
}

TEST(AddressList, CountsEveryMailbox)
{
    EXPECT_EQ(parse_address_list("a@x.org, b@y.org, \"C, D\" <c@z.org>").size(), 3u);
    EXPECT_EQ(parse_address_list("").size(), 0u);
}

TEST(AddressList, FlagsMalformedAddresses)
{
    const auto addrs = parse_address_list("nobody, x@@y, ok@fine.com");
    ASSERT_EQ(addrs.size(), 3u);
    EXPECT_TRUE(addrs[0].is_malformed);
    EXPECT_TRUE(addrs[1].is_malformed);
    EXPECT_FALSE(addrs[2].is_malformed);
    EXPECT_EQ(addrs[1].addr_spec, "x@@y");
}

TEST(AddressList, GroupSyntax)
{
    const auto addrs = parse_address_list("Team: a@x.org, b@x.org;, c@x.org");
    ASSERT_EQ(addrs.size(), 3u);
    EXPECT_EQ(addrs[2].addr_spec, "c@x.org");
    EXPECT_TRUE(parse_address_list("undisclosed-recipients:;").empty());
}

TEST(AddressList, CommentsAndEncodedDisplayNames)
{
    const auto addrs = parse_address_list("=?UTF-8?B?SsO8cmdlbg==?= <j@x.de>, k@x.de (Kay)");
    ASSERT_EQ(addrs.size(), 2u);
    EXPECT_EQ(addrs[0].display_name, "J\xc3\xbcrgen");
    EXPECT_EQ(addrs[1].addr_spec, "k@x.de");
}

class FixtureCorpus : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureCorpus, PartsMatchExpectation)
{
    const auto expected = testsupport::load_json(testsupport::test_dir() / "fixtures" / "expected_parts.json");
    const auto problems = testsupport::check_fixture(GetParam(), expected.at(GetParam()));
    for (const auto& p : problems)
        ADD_FAILURE() << p;
}

class WellFormedFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(WellFormedFixture, HeaderRoundTripPreservesParts)
{
    const auto first = parse_eml(testsupport::slurp(testsupport::corpus_dir() / GetParam()));
    const auto again = parse_eml(serialize_headers(first) + "\n");
    EXPECT_EQ(again.parts.from_addr, first.parts.from_addr);
    EXPECT_EQ(again.parts.to_addrs, first.parts.to_addrs);
    EXPECT_EQ(again.parts.cc_addrs, first.parts.cc_addrs);
    EXPECT_EQ(again.parts.bcc_addrs, first.parts.bcc_addrs);
    EXPECT_EQ(again.parts.subject, first.parts.subject);
}

TEST_P(FixtureCorpus, BodiesCarryNoTransferEncodingArtifacts)
{
    try {
        const auto email = parse_eml(testsupport::slurp(testsupport::corpus_dir() / GetParam()));
        EXPECT_EQ(email.parts.text_body.find("=\n"), std::string::npos);
        EXPECT_EQ(email.parts.text_body.find('\r'), std::string::npos);
        EXPECT_EQ(email.parts.html_body.find('\r'), std::string::npos);
    } catch (const MalformedMessage&) {
    }
}

namespace {

std::vector<std::string> fixture_names(bool well_formed_only = false)
{
    std::vector<std::string> names;
    const auto expected = testsupport::load_json(testsupport::test_dir() / "fixtures" / "expected_parts.json");
    for (const auto& [k, v] : expected.items())
        if (!well_formed_only || !v.value("malformed", false))
            names.push_back(k);
    return names;
}

std::string param_name(const ::testing::TestParamInfo<std::string>& info)
{
    std::string s = info.param;
    for (auto& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)))
            c = '_';
    return s;
}

} // namespace

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureCorpus, ::testing::ValuesIn(fixture_names()), param_name);
INSTANTIATE_TEST_SUITE_P(Fixtures, WellFormedFixture, ::testing::ValuesIn(fixture_names(true)), param_name);
