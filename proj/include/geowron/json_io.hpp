#pragma once

#include <json.hpp>

#include "geowron/jet.hpp"
#include "geowron/vandermonde.hpp"
#include "geowron/word.hpp"
#include "geowron/wronskian.hpp"

namespace gwron {

using Json = nlohmann::ordered_json;

Json word_to_json(const Word& w);
Json wordset_words_json(const WordSet& ws);  // bare array of exponent vectors
Json wordset_to_json(const WordSet& ws);     // words plus stats object
Json diffpoly_to_json(const DiffPoly& d);
Json combination_to_json(const WronskianCombination& w);
Json certify_report_to_json(const CertifyReport& r);

// Reads one word: an array of length p is an exponent vector, any other
// length is a letter list over 1..p.
Word word_from_json(const Json& j, int p);
WordSet wordset_from_json(const Json& j, int p);  // array of words
WronskianCombination combination_from_json(const Json& j, int p);

}  // namespace gwron
