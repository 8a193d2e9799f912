#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncconic/galgebra.hpp"

namespace ncconic {

using ParamMap = std::map<std::string, Scalar>;

// Expression grammar: sums of terms; products need '*' or a parenthesised factor
// ("y(x+z)", "2x", "(x+y)^2"); '^' takes a nonnegative integer; scalars are
// integers, p/q, i (when not a generator), sqrt(d), and parameter names.
NcPoly parse_poly(const std::string& text, const AmbientPtr& amb, const ParamMap& params = {});
Scalar parse_scalar(const std::string& text, FieldSpec field, const ParamMap& params = {});
FieldSpec parse_field(const std::string& text);

// A header-based presentation file.
//   field: Q | Q(i) | Q(sqrt d)
//   gens: x y z
//   rel: <expr>          (repeatable)
//   elem: <expr>         (repeatable)
//   expect: <key> = <value>
struct PresentationFile {
  Presentation presentation;
  std::vector<NcPoly> elements;
  std::vector<std::pair<std::string, std::string>> expectations;
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile read_presentation_file(const std::string& path);
std::string print_presentation(const Presentation& p);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace ncconic
