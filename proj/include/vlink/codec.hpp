#pragma once

#include <string>

#include "vlink/gauss_code.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

// Text format, one component per line, whitespace-separated tokens:
//   classical passage:  (O|U)<id>(+|-)
//   virtual passage:    V<id>
//   cut point:          #   (occupies the slot after the preceding passage
//                            on its line; a leading # is a syntax error)
//   empty component:    the single token ()
// UTF-8, LF line endings, case-sensitive. Identifiers are normalized to
// dense integers; serialization numbers them 1,2,... in traversal order
// unless the code carries display names.
ExtendedGaussCode parse(const std::string& text);
std::string serialize(const ExtendedGaussCode& code);

// Doubled linking integers render exactly: "3" doubled is "3/2", "4" is "2".
std::string format_doubled(long long doubled);

// Machine-readable invariant report (JSON).
std::string emit_report(const InvariantReport& report);

}  // namespace vlink
