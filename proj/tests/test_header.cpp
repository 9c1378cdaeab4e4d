#include <gtest/gtest.h>

#include <mailfeat/features_header.hpp>

using namespace mailfeat;

namespace {

std::vector<Address> addrs(std::initializer_list<const char*> specs)
{
    std::vector<Address> out;
    for (const char* s : specs)
        out.push_back(Address{"", s, false});
    return out;
}

double feature(const ParsedEmail& email, std::string_view id)
{
    return header_features(email, DomainKeywordTable::defaults())[full_catalog().index_of(id).value()];
}

} // namespace

TEST(DateHeader, FullRfc5322Date)
{
    EXPECT_EQ(parse_date_header("Thu, 22 Aug 2002 18:26:25 +0700"), (DateParts{2002, 8, 22, 18, 26, 25, true}));
}

TEST(DateHeader, Garbage)
{
    EXPECT_EQ(parse_date_header("garbage"), DateParts{});
    EXPECT_EQ(parse_date_header(""), DateParts{});
}

TEST(DateHeader, MissingSeconds)
{
    const auto d = parse_date_header("22 Aug 2002 18:26 +0000");
    EXPECT_TRUE(d.valid);
    EXPECT_EQ(d.second, 0);
    EXPECT_EQ(d.minute, 26);
}

TEST(DateHeader, ObsoleteFormsAndComments)
{
    EXPECT_EQ(parse_date_header("Fri, 13 Sep 02 8:05:00 EST"), (DateParts{2002, 9, 13, 8, 5, 0, true}));
    EXPECT_EQ(parse_date_header("Mon, 1 Jan 99 00:00:00 GMT (comment 12:34)"), (DateParts{1999, 1, 1, 0, 0, 0, true}));
    EXPECT_EQ(parse_date_header("Tue, 10 Dec 2002 23:59:59 -0800 (PST)").hour, 23);
}

TEST(DateHeader, OutOfRangeClockIsInvalid)
{
    EXPECT_FALSE(parse_date_header("1 Jan 2002 25:00:00").valid);
    EXPECT_FALSE(parse_date_header("1 Foo 2002 10:00:00").valid);
}

TEST(DomainFlag, Examples)
{
    const auto t = DomainKeywordTable::defaults();
    EXPECT_EQ(domain_flag(addrs({"a@mail.google.com"}), "google", t), 1);
    EXPECT_EQ(domain_flag(addrs({"a@yahoo.co.uk"}), "google", t), 0);
    EXPECT_EQ(domain_flag(addrs({"b@state.gov"}), "gov", t), 1);
}

TEST(DomainFlag, DotPatternsMatchWholeLabels)
{
    const auto t = DomainKeywordTable::defaults();
    EXPECT_EQ(domain_flag(addrs({"b@agency.gov.uk"}), "gov", t), 1);
    EXPECT_EQ(domain_flag(addrs({"b@govtrack.us"}), "gov", t), 0);
    EXPECT_EQ(domain_flag(addrs({"x@army.mil"}), "mil", t), 1);
    EXPECT_EQ(domain_flag(addrs({"x@mail.milwaukee.com"}), "mil", t), 0);
}

TEST(DomainFlag, GmailCountsAsGoogleAndCaseIsIgnored)
{
    const auto t = DomainKeywordTable::defaults();
    EXPECT_EQ(domain_flag(addrs({"x@GMAIL.com"}), "google", t), 1);
}

TEST(DomainFlag, MalformedAddressesOnlyMatchLocalhost)
{
    const auto t = DomainKeywordTable::defaults();
    const std::vector<Address> bad{{"", "root@@localhost", true}, {"", "yahoo", true}};
    EXPECT_EQ(domain_flag(bad, "localhost", t), 1);
    EXPECT_EQ(domain_flag(bad, "yahoo", t), 0);
}

TEST(DomainFlag, AddingAnUnrelatedRecipientNeverClearsAFlag)
{
    const auto t = DomainKeywordTable::defaults();
    auto list = addrs({"a@hotmail.com"});
    ASSERT_EQ(domain_flag(list, "hotmail", t), 1);
    list.push_back(Address{"", "z@unrelated.org", false});
    EXPECT_EQ(domain_flag(list, "hotmail", t), 1);
}

TEST(DomainTable, MergeOverridesAndRejectsUnknownKeys)
{
    auto t = DomainKeywordTable::defaults();
    t.merge("# comment\nyahoo = [\"ymail\", \"Rocketmail\"]\n");
    EXPECT_EQ(t.patterns("yahoo"), (std::vector<std::string>{"ymail", "rocketmail"}));
    EXPECT_EQ(t.patterns("google"), (std::vector<std::string>{"google", "gmail"}));
    EXPECT_THROW(t.merge("bogus = [\"x\"]"), DomainTableError);
    EXPECT_THROW(t.merge("yahoo = \"x\""), DomainTableError);
}

TEST(HeaderFeatures, SubjectShape)
{
    const auto email = parse_eml("Subject: WIN $$$ NOW\n\n");
    EXPECT_EQ(feature(email, "H36"), 2);
    EXPECT_EQ(feature(email, "H34"), 11);
    EXPECT_EQ(feature(email, "H38"), 2);
    EXPECT_EQ(feature(email, "H49"), 3);
}

TEST(HeaderFeatures, NoReplyToMeansZeroFlags)
{
    const auto email = parse_eml("From: a@gmail.com\nTo: b@gmail.com\n\nx");
    for (const char* id : {"H24", "H25", "H26", "H27", "H28", "H29"})
        EXPECT_EQ(feature(email, id), 0) << id;
    EXPECT_EQ(feature(email, "H07"), 1);
    EXPECT_EQ(feature(email, "H19"), 1);
}

TEST(HeaderFeatures, AlternativeStructureFlags)
{
    const auto email = parse_eml("Content-Type: multipart/alternative; boundary=b\n\n"
                                 "--b\nContent-Type: text/plain\n\nT\n--b\nContent-Type: text/html\n\n<p>T</p>\n--b--\n");
    EXPECT_EQ(feature(email, "H33"), 1);
    EXPECT_EQ(feature(email, "H32"), 0);
    EXPECT_EQ(feature(email, "H31"), 1);
}

TEST(HeaderFeatures, FromHotmailDrivesRowTen)
{
    const auto email = parse_eml("From: x@hotmail.com\n\n");
    EXPECT_EQ(feature(email, "H10"), 1);
}

TEST(HeaderFeatures, RecipientCountAndMailman)
{
    const auto email = parse_eml("To: a@x.org, b@y.org, \"C, D\" <c@z.org>\nCc: d@w.org\nX-Mailman-Version: 2.1\n\n");
    EXPECT_EQ(feature(email, "H23"), 3);
    EXPECT_EQ(feature(email, "H30"), 1);
}

TEST(HeaderFeatures, DateColumns)
{
    const auto email = parse_eml("Date: Thu, 22 Aug 2002 18:26:25 +0700\n\n");
    const auto f = header_features(email, DomainKeywordTable::defaults());
    EXPECT_EQ((std::vector<double>{f[0], f[1], f[2], f[3], f[4], f[5]}),
              (std::vector<double>{2002, 8, 22, 18, 26, 25}));
}

TEST(HeaderFeatures, BooleanColumnsAreZeroOrOne)
{
    const auto email = parse_eml("From: a@gmail.com, b@google.com\nTo: c@yahoo.com\nReply-To: d@aol.com\n\nx");
    const auto f = header_features(email, DomainKeywordTable::defaults());
    const auto defs = full_catalog().defs();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (defs[i].value_kind == ValueKind::boolean01) {
            EXPECT_TRUE(f[i] == 0 || f[i] == 1) << defs[i].id;
        }
    }
}

TEST(HeaderFeatures, TextBodyImpliesTextPlainFlag)
{
    const auto email = parse_eml("Subject: x\n\nhello");
    ASSERT_FALSE(email.parts.text_body.empty());
    EXPECT_EQ(feature(email, "H31"), 1);
}
