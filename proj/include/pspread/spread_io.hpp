#pragma once

#include <iosfwd>
#include <string>

#include "pspread/construct.hpp"

namespace pspread::io {

// Spread file format (UTF-8, line oriented):
//   line 1:  q=<int> n=<int> t=<int>
//   then one member per line: t basis vectors separated by ';', each vector
//   n space-separated integers in [0,q), rows in RREF order. '#' starts a
//   comment. Files are canonical: readers reject members whose rows are not
//   the RREF basis of their span.

struct SpreadHeader {
  unsigned q = 0;
  int n = 0;
  int t = 0;
};

void write_header(std::ostream& os, unsigned q, int n, int t);
void write_member(std::ostream& os, const construct::MemberView& m);
void write_spread(std::ostream& os, const construct::PartialSpread& spread);

// Parses the header and streams members in file order. Throws ParseError
// (with the offending line number) on malformed input.
SpreadHeader read_spread(
    std::istream& is,
    const std::function<void(const space::Subspace&)>& sink);

construct::PartialSpread read_spread_file(std::istream& is);

std::string member_to_line(const construct::MemberView& m);

}  // namespace pspread::io
