#pragma once

// Generated by tools/embed_data.py from data/. Do not edit by hand.

#include <string_view>

namespace mailfeat::defaults {

inline constexpr std::string_view stopwords[] = {
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "am",
    "an",
    "and",
    "any",
    "are",
    "aren't",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can't",
    "cannot",
    "could",
    "couldn't",
    "did",
    "didn't",
    "do",
    "does",
    "doesn't",
    "doing",
    "don't",
    "down",
    "during",
    "each",
    "few",
    "for",
    "from",
    "further",
    "had",
    "hadn't",
    "has",
    "hasn't",
    "have",
    "haven't",
    "having",
    "he",
    "he'd",
    "he'll",
    "he's",
    "her",
    "here",
    "here's",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "how's",
    "i",
    "i'd",
    "i'll",
    "i'm",
    "i've",
    "if",
    "in",
    "into",
    "is",
    "isn't",
    "it",
    "it's",
    "its",
    "itself",
    "let's",
    "me",
    "more",
    "most",
    "mustn't",
    "my",
    "myself",
    "no",
    "nor",
    "not",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "ought",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "same",
    "shan't",
    "she",
    "she'd",
    "she'll",
    "she's",
    "should",
    "shouldn't",
    "so",
    "some",
    "such",
    "than",
    "that",
    "that's",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "there's",
    "these",
    "they",
    "they'd",
    "they'll",
    "they're",
    "they've",
    "this",
    "those",
    "through",
    "to",
    "too",
    "under",
    "until",
    "up",
    "very",
    "was",
    "wasn't",
    "we",
    "we'd",
    "we'll",
    "we're",
    "we've",
    "were",
    "weren't",
    "what",
    "what's",
    "when",
    "when's",
    "where",
    "where's",
    "which",
    "while",
    "who",
    "who's",
    "whom",
    "why",
    "why's",
    "with",
    "won't",
    "would",
    "wouldn't",
    "you",
    "you'd",
    "you'll",
    "you're",
    "you've",
    "your",
    "yours",
    "yourself",
    "yourselves",
};

inline constexpr std::string_view spam_words[] = {
    "earn extra cash",
    "100% free",
    "additional income",
    "all natural",
    "as seen on",
    "bargain",
    "best price",
    "big bucks",
    "billion",
    "billion dollars",
    "cash",
    "cash bonus",
    "cashcashcash",
    "cheap",
    "check or money order",
    "collect",
    "compare rates",
    "consolidate debt",
    "credit",
    "credit card offers",
    "credit repair",
    "debt",
    "discount",
    "dollars",
    "double your",
    "earn",
    "earn cash",
    "earn money",
    "easy terms",
    "extra cash",
    "extra income",
    "f r e e",
    "fast cash",
    "financial freedom",
    "for just",
    "free",
    "free access",
    "free consultation",
    "free gift",
    "free hosting",
    "free info",
    "free investment",
    "free membership",
    "free money",
    "free preview",
    "free quote",
    "free trial",
    "full refund",
    "get paid",
    "giveaway",
    "hidden charges",
    "home based",
    "income",
    "increase sales",
    "increase traffic",
    "insurance",
    "investment",
    "lowest price",
    "lower interest rate",
    "lower rates",
    "loan",
    "loans",
    "make money",
    "million",
    "million dollars",
    "money",
    "money back",
    "mortgage",
    "mortgage rates",
    "no catch",
    "no cost",
    "no credit check",
    "no fees",
    "no hidden costs",
    "no investment",
    "offer",
    "one hundred percent free",
    "pennies a day",
    "price",
    "prices",
    "profit",
    "profits",
    "pure profit",
    "refinance",
    "refinance home",
    "rich",
    "risk free",
    "save",
    "save big",
    "save money",
    "serious cash",
    "stock",
    "stock alert",
    "unsecured credit",
    "unsecured debt",
    "wealth",
    "work from home",
    "act now",
    "action required",
    "apply now",
    "apply online",
    "call now",
    "call free",
    "click",
    "click below",
    "click here",
    "click to remove",
    "do it today",
    "don't delete",
    "don't hesitate",
    "exclusive deal",
    "expires",
    "for instant access",
    "get it now",
    "get started now",
    "hurry",
    "immediately",
    "instant",
    "limited time",
    "limited time offer",
    "now only",
    "offer expires",
    "once in a lifetime",
    "only",
    "order now",
    "order today",
    "please read",
    "supplies are limited",
    "take action",
    "time limited",
    "today",
    "urgent",
    "what are you waiting for",
    "while supplies last",
    "who really wins",
    "you have been selected",
    "100% satisfied",
    "amazing",
    "best deal",
    "certified",
    "congratulations",
    "dear friend",
    "guarantee",
    "guaranteed",
    "incredible deal",
    "miracle",
    "no obligation",
    "no purchase necessary",
    "no questions asked",
    "no strings attached",
    "not spam",
    "opportunity",
    "promise",
    "promise you",
    "removes wrinkles",
    "reverses aging",
    "satisfaction",
    "satisfaction guaranteed",
    "special promotion",
    "this is not spam",
    "unbelievable",
    "while you sleep",
    "winner",
    "winning",
    "won",
    "you are a winner",
    "you have won",
    "bonus",
    "cash prize",
    "claim",
    "claim your",
    "claim your prize",
    "gift",
    "gift card",
    "lottery",
    "prize",
    "prizes",
    "sweepstakes",
    "viagra",
    "ad",
    "advertisement",
    "affordable",
    "auction",
    "bulk email",
    "buy",
    "buy direct",
    "buy now",
    "buying judgments",
    "cancel at any time",
    "casino",
    "clearance",
    "deal",
    "direct marketing",
    "email marketing",
    "marketing",
    "marketing solutions",
    "mass email",
    "member",
    "multi level marketing",
    "newsletter",
    "opt in",
    "order",
    "orders shipped by",
    "promotion",
    "purchase",
    "sale",
    "sales",
    "shopping spree",
    "special offer",
    "subscribe",
    "unsubscribe",
    "visit our website",
    "web traffic",
    "wholesale",
    "anti-aging",
    "cialis",
    "cures",
    "diet",
    "fast weight loss",
    "lose weight",
    "medicine",
    "meds",
    "pharmacy",
    "pills",
    "prescription",
    "vicodin",
    "weight loss",
    "xanax",
    "adult",
    "dating",
    "sex",
    "singles",
    "xxx",
    "account suspended",
    "beneficiary",
    "confidential",
    "dear sir",
    "inheritance",
    "nigerian",
    "password",
    "stop",
    "verify",
    "verify your account",
    "wire transfer",
    "your account",
    "your income",
    "bank account",
    "security alert",
    "update your information",
    "claims to be",
    "social security number",
    "access",
    "accept credit cards",
    "billing",
    "chance",
    "compare",
    "copy",
    "dvd",
    "fantastic",
    "for free",
    "free sample",
    "hot",
    "junk",
    "leads",
    "lifetime",
    "lowest",
    "new customers only",
    "online",
    "online biz opportunity",
    "online degree",
    "online pharmacy",
    "passwords",
    "per day",
    "per week",
    "potential earnings",
    "pre-approved",
    "priority mail",
    "quote",
    "rates",
    "reserves the right",
    "reply",
    "sample",
    "search engine",
    "search engines",
    "secret",
    "snoring",
    "spam",
    "special",
    "success",
    "trial",
    "valium",
    "vacation",
    "warranty",
    "web",
    "website",
    "win",
    "your family",
};

inline constexpr std::string_view function_words[] = {
    "a",
    "all",
    "an",
    "another",
    "any",
    "both",
    "certain",
    "each",
    "either",
    "enough",
    "every",
    "few",
    "fewer",
    "less",
    "little",
    "many",
    "more",
    "most",
    "much",
    "neither",
    "no",
    "several",
    "some",
    "such",
    "that",
    "the",
    "these",
    "this",
    "those",
    "what",
    "whatever",
    "which",
    "whichever",
    "he",
    "her",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "i",
    "it",
    "its",
    "itself",
    "me",
    "mine",
    "my",
    "myself",
    "one",
    "oneself",
    "our",
    "ours",
    "ourselves",
    "she",
    "their",
    "theirs",
    "them",
    "themselves",
    "they",
    "thee",
    "thou",
    "thy",
    "us",
    "we",
    "who",
    "whoever",
    "whom",
    "whomever",
    "whose",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
    "anybody",
    "anyone",
    "anything",
    "everybody",
    "everyone",
    "everything",
    "nobody",
    "none",
    "nothing",
    "somebody",
    "someone",
    "something",
    "aboard",
    "about",
    "above",
    "across",
    "after",
    "against",
    "along",
    "alongside",
    "amid",
    "amidst",
    "among",
    "amongst",
    "around",
    "as",
    "at",
    "atop",
    "before",
    "behind",
    "below",
    "beneath",
    "beside",
    "besides",
    "between",
    "beyond",
    "by",
    "concerning",
    "considering",
    "despite",
    "down",
    "during",
    "except",
    "excepting",
    "excluding",
    "following",
    "for",
    "from",
    "in",
    "inside",
    "into",
    "like",
    "minus",
    "near",
    "nearby",
    "notwithstanding",
    "of",
    "off",
    "on",
    "onto",
    "opposite",
    "out",
    "outside",
    "over",
    "past",
    "per",
    "plus",
    "regarding",
    "round",
    "save",
    "since",
    "than",
    "through",
    "throughout",
    "till",
    "to",
    "toward",
    "towards",
    "under",
    "underneath",
    "unlike",
    "until",
    "unto",
    "up",
    "upon",
    "versus",
    "via",
    "with",
    "within",
    "without",
    "although",
    "and",
    "because",
    "but",
    "if",
    "lest",
    "nor",
    "once",
    "or",
    "provided",
    "so",
    "though",
    "unless",
    "whereas",
    "whether",
    "while",
    "whilst",
    "yet",
    "am",
    "are",
    "be",
    "been",
    "being",
    "can",
    "cannot",
    "could",
    "did",
    "do",
    "does",
    "doing",
    "done",
    "had",
    "has",
    "have",
    "having",
    "is",
    "may",
    "might",
    "must",
    "need",
    "ought",
    "shall",
    "should",
    "was",
    "were",
    "will",
    "would",
    "aren't",
    "can't",
    "couldn't",
    "didn't",
    "doesn't",
    "don't",
    "hadn't",
    "hasn't",
    "haven't",
    "isn't",
    "mightn't",
    "mustn't",
    "needn't",
    "shan't",
    "shouldn't",
    "wasn't",
    "weren't",
    "won't",
    "wouldn't",
    "again",
    "ago",
    "almost",
    "already",
    "also",
    "always",
    "anyhow",
    "anyway",
    "anywhere",
    "else",
    "elsewhere",
    "ever",
    "everywhere",
    "here",
    "hence",
    "how",
    "however",
    "indeed",
    "just",
    "later",
    "maybe",
    "meanwhile",
    "moreover",
    "nevertheless",
    "never",
    "nonetheless",
    "not",
    "now",
    "nowhere",
    "often",
    "only",
    "otherwise",
    "perhaps",
    "quite",
    "rather",
    "seldom",
    "sometimes",
    "somewhat",
    "somewhere",
    "soon",
    "still",
    "then",
    "thence",
    "there",
    "thereby",
    "therefore",
    "thus",
    "too",
    "very",
    "when",
    "whence",
    "where",
    "whereby",
    "wherever",
    "why",
    "yes",
};

inline constexpr std::string_view domains_toml = R"toml(# Domain keyword table for the From/To/Reply-To flags.
# key = keyword, value = list of patterns (lowercase).
# Patterns starting with "." match a whole dot-separated label of the domain
# (so ".gov" matches "state.gov" and "agency.gov.uk"); other patterns match as
# substrings of the domain.
google = ["google", "gmail"]
yahoo = ["yahoo"]
aol = ["aol"]
gov = [".gov"]
mil = [".mil"]
hotmail = ["hotmail"]
msn = ["msn"]
example = ["example"]
localhost = ["localhost"]
)toml";

} // namespace mailfeat::defaults
