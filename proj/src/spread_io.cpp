#include "pspread/spread_io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace pspread::io {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::string member_to_line(const construct::MemberView& m) {
  std::string out;
  out.reserve(size_t(m.t) * m.n * 2);
  for (int r = 0; r < m.t; ++r) {
    if (r) out += ';';
    for (int i = 0; i < m.n; ++i) {
      if (i) out += ' ';
      out += std::to_string(m.rows[size_t(r) * m.n + i]);
    }
  }
  return out;
}

void write_header(std::ostream& os, unsigned q, int n, int t) {
  os << "q=" << q << " n=" << n << " t=" << t << '\n';
}

void write_member(std::ostream& os, const construct::MemberView& m) {
  os << member_to_line(m) << '\n';
}

void write_spread(std::ostream& os, const construct::PartialSpread& spread) {
  write_header(os, spread.ctx.q(), spread.ctx.n, spread.t);
  for (const auto& s : spread.members)
    write_member(os, construct::MemberView{s.rows().data(),
                                           s.pivots().data(), s.dim(), s.n()});
}

SpreadHeader read_spread(
    std::istream& is,
    const std::function<void(const space::Subspace&)>& sink) {
  std::string line;
  long lineno = 0;
  SpreadHeader hdr;
  // header: first significant line
  for (;;) {
    if (!std::getline(is, line))
      throw ParseError("missing header line 'q=.. n=.. t=..'", lineno);
    ++lineno;
    if (!blank_or_comment(line)) break;
  }
  if (std::sscanf(line.c_str(), "q=%u n=%d t=%d", &hdr.q, &hdr.n, &hdr.t) != 3)
    throw ParseError("malformed header: '" + line + "'", lineno);
  if (hdr.t < 1 || hdr.t > hdr.n)
    throw ParseError("header requires 1 <= t <= n", lineno);
  space::VectorSpaceCtx ctx = [&] {
    try {
      return space::make_ctx(hdr.q, hdr.n);
    } catch (const Error& e) {
      throw ParseError(std::string("bad header parameters: ") + e.what(), lineno);
    }
  }();

  std::vector<space::Vec> rows(size_t(hdr.t), space::Vec(size_t(hdr.n)));
  while (std::getline(is, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    // strip trailing comment
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::stringstream ls(line);
    std::string vec_str;
    int r = 0;
    while (std::getline(ls, vec_str, ';')) {
      if (r >= hdr.t) throw ParseError("more than t basis vectors", lineno);
      std::stringstream vs(vec_str);
      long value;
      for (int i = 0; i < hdr.n; ++i) {
        if (!(vs >> value))
          throw ParseError("expected " + std::to_string(hdr.n) +
                               " coordinates per vector",
                           lineno);
        if (value < 0 || (unsigned long)value >= hdr.q)
          throw ParseError("coordinate " + std::to_string(value) +
                               " out of range [0," + std::to_string(hdr.q) + ")",
                           lineno);
        rows[size_t(r)][size_t(i)] = space::Elem(value);
      }
      if (vs >> value) throw ParseError("trailing coordinates", lineno);
      ++r;
    }
    if (r != hdr.t)
      throw ParseError("member has " + std::to_string(r) +
                           " basis vectors, expected " + std::to_string(hdr.t),
                       lineno);
    space::Subspace s = [&] {
      try {
        return space::rref_canonical(ctx, rows);
      } catch (const DimensionZero&) {
        throw ParseError("member rows span the zero space", lineno);
      }
    }();
    // files are canonical: the rows must already be the RREF basis
    bool canonical = s.dim() == hdr.t;
    for (size_t i = 0; canonical && i < s.rows().size(); ++i)
      canonical = s.rows()[i] == rows[i / size_t(hdr.n)][i % size_t(hdr.n)];
    if (!canonical)
      throw ParseError("member rows are not a canonical RREF basis", lineno);
    sink(s);
  }
  return hdr;
}

construct::PartialSpread read_spread_file(std::istream& is) {
  construct::PartialSpread out;
  std::vector<space::Subspace> members;
  SpreadHeader hdr =
      read_spread(is, [&](const space::Subspace& s) { members.push_back(s); });
  out.ctx = space::make_ctx(hdr.q, hdr.n);
  out.t = hdr.t;
  out.members = std::move(members);
  return out;
}

}  // namespace pspread::io
