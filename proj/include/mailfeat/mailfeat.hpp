#pragma once

#include "catalog.hpp"
#include "codec.hpp"
#include "corpus.hpp"
#include "eml.hpp"
#include "extract.hpp"
#include "features_attachment.hpp"
#include "features_body.hpp"
#include "features_header.hpp"
#include "lexical.hpp"
#include "lexicon.hpp"
#include "readability.hpp"
#include "textkit.hpp"
