#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avm/feature_structure.hpp"

namespace lexlab::avm {

// Text form of feature structures, used by grammar/lexicon files:
//
//   structure := '[' [ pair (',' pair)* ] ']'
//   pair      := name ':' value
//   value     := structure | variable | atom
//   variable  := '?' token          e.g. ?N
//   atom      := token              e.g. det, plur, 3, massa's
//
// Tokens are runs of letters, digits, '_', '-', '\'' and any non-ASCII UTF-8
// byte. '#' starts a comment running to end of line. Attribute names fold to
// upper case and atoms to lower case, so print(parse(s)) is a canonical
// spelling and parse(print(x)) == x for every structure x.
struct ParsedEntry {
  FeatureStructure fs;
  int line = 0;  // 1-based line where the structure starts
};

FeatureStructure parse_structure(std::string_view text);
std::vector<ParsedEntry> parse_structures(std::string_view text);

std::string print_structure(const FeatureStructure& fs);

}  // namespace lexlab::avm
