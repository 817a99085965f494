#include "pspread/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pspread/bounds.hpp"
#include "pspread/construct.hpp"
#include "pspread/partition.hpp"
#include "pspread/search.hpp"
#include "pspread/spread_io.hpp"

namespace pspread::cli {

namespace {

constexpr long long kPairwiseDistanceCap = 2000;

std::string provenance_str(const bounds::BoundsReport& rep) {
  std::string s;
  for (const auto& [src, val] : rep.provenance) {
    if (!s.empty()) s += ' ';
    s += bounds::source_label(src);
    s += '=';
    s += val.str();
  }
  return s;
}

void print_bounds_row(std::ostream& out, unsigned q, int n, int t, bool machine) {
  bounds::BoundsReport rep = bounds::exact_or_range(q, n, t);
  if (machine) {
    out << "BOUND " << q << ' ' << n << ' ' << t << ' ' << rep.lower << ' '
        << rep.upper << ' ' << (rep.exact ? rep.exact->str() : std::string("-"))
        << ' ' << provenance_str(rep) << '\n';
  } else {
    out << "q=" << q << " n=" << n << " t=" << t << " mu=";
    if (rep.exact)
      out << *rep.exact << " exact";
    else
      out << rep.lower << ".." << rep.upper << " range";
    out << " [" << provenance_str(rep) << "]\n";
  }
}

int cmd_bounds(unsigned q, int n, int t, int sweep, bool machine,
               std::ostream& out) {
  if (sweep > 0) {
    for (int nn = t + 1; nn <= sweep; ++nn) print_bounds_row(out, q, nn, t, machine);
  } else {
    print_bounds_row(out, q, n, t, machine);
  }
  return 0;
}

int cmd_construct(unsigned q, int n, int t, const std::string& path,
                  std::ostream& out, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open " << path << " for writing\n";
    return 2;
  }
  io::write_header(f, q, n, t);
  long long size = 0;
  construct::stream_partial_spread(q, n, t, [&](const construct::MemberView& m) {
    io::write_member(f, m);
    ++size;
  });
  f.flush();
  if (!f) {
    err << "write failure on " << path << "\n";
    return 2;
  }
  space::VectorSpaceCtx ctx = space::make_ctx(q, n);
  out << "wrote " << size << " members to " << path
      << " (holes=" << ctx.num_points() - size * ctx.theta(t) << ")\n";
  return 0;
}

// Re-reads the file to name the first member containing the given point.
long long find_first_owner(const std::string& path, long long point) {
  std::ifstream f(path, std::ios::binary);
  long long idx = 0, found = -1;
  io::read_spread(f, [&](const space::Subspace& s) {
    if (found < 0) {
      auto pts = space::points(s);
      if (std::binary_search(pts.begin(), pts.end(), point)) found = idx;
    }
    ++idx;
  });
  return found;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open " << path << "\n";
    return 2;
  }
  // Stream-verify; keep members only while small enough for the pairwise
  // distance computation.
  std::vector<space::Subspace> members;
  bool keep = true;
  construct::StreamVerifier* ver = nullptr;
  io::SpreadHeader hdr;
  try {
    std::unique_ptr<construct::StreamVerifier> holder;
    hdr = io::read_spread(f, [&](const space::Subspace& s) {
      if (!holder) {
        holder = std::make_unique<construct::StreamVerifier>(s.ctx(), s.dim());
        ver = holder.get();
      }
      ver->add(s);
      if (keep) {
        members.push_back(s);
        if ((long long)members.size() > kPairwiseDistanceCap) {
          members.clear();
          keep = false;
        }
      }
    });
    if (!ver) {
      // empty spread: vacuous but well-formed
      space::VectorSpaceCtx ctx = space::make_ctx(hdr.q, hdr.n);
      out << "size=0 holes=" << ctx.num_points() << " min_dist=- OK\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "ParseError line " << e.line() << ": " << e.what() << "\n";
    return 1;
  }
  construct::VerifyReport rep = ver->finalize();
  if (rep.status == construct::VerifyStatus::kOverlapError) {
    long long first = find_first_owner(path, rep.point);
    err << "OverlapError members (" << first << "," << rep.member_b
        << ") share point " << rep.point << "\n";
    return 1;
  }
  if (rep.status == construct::VerifyStatus::kDimensionError) {
    err << "DimensionError member " << rep.member_b << ": " << rep.message << "\n";
    return 1;
  }
  std::string dist = "-";
  if (rep.size >= 2) {
    if (keep)
      dist = std::to_string(construct::min_subspace_distance(members));
    else
      dist = std::to_string(2 * hdr.t);  // implied by verified disjointness
  }
  out << "size=" << rep.size << " holes=" << rep.holes << " min_dist=" << dist
      << " OK\n";
  return 0;
}

int cmd_search(unsigned q, int n, int t, double time_limit, bool paper_bounds,
               std::ostream& out) {
  search::SearchConfig cfg;
  cfg.time_limit_seconds = time_limit;
  cfg.use_paper_bounds = paper_bounds;
  search::SearchResult res = search::max_partial_spread(q, n, t, cfg);
  std::ostringstream el;
  el.precision(3);
  el << std::fixed << res.elapsed_seconds;
  out << "q=" << q << " n=" << n << " t=" << t << " size=" << res.size
      << " optimal=" << (res.optimal ? "yes" : "no")
      << " nodes=" << res.nodes_explored << " elapsed=" << el.str() << "s\n";
  return 0;
}

std::string type_str(const partition::TypeVector& type) {
  std::string s = "[";
  for (const auto& [d, cnt] : type) {
    if (s.size() > 1) s += ',';
    s += std::to_string(d) + "^" + std::to_string(cnt);
  }
  return s + "]";
}

int cmd_analyze(const std::string& path, bool per_hyperplane, bool machine,
                std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open " << path << "\n";
    return 2;
  }
  construct::PartialSpread spread;
  try {
    spread = io::read_spread_file(f);
  } catch (const ParseError& e) {
    err << "ParseError line " << e.line() << ": " << e.what() << "\n";
    return 1;
  }
  partition::SubspacePartition part;
  try {
    part = partition::from_partial_spread(spread);
  } catch (const InvalidInput& e) {
    err << e.what() << "\n";
    return 1;
  }
  out << "partition of V(" << part.ctx.n << "," << part.ctx.q() << "), type "
      << type_str(part.type) << ", size " << part.size() << "\n";

  partition::PartitionReport val = partition::validate_partition(part);
  if (!val.ok()) {
    err << val.message << "\n";
    return 1;
  }
  out << "exact cover: ok (" << part.ctx.num_points() << " points)\n";

  partition::IdentityReport h0 = partition::check_hele0(part);
  out << "per-hyperplane size identity |P| = 1 + sum b_d q^d: "
      << (h0.ok ? "ok" : "VIOLATION " + h0.message) << "\n";
  partition::IdentityReport h1 = partition::check_hele1(part);
  out << "histogram identities sum s_b = Theta_n, sum b_d s_b = n_d Theta_{n-d}: "
      << (h1.ok ? "ok" : "VIOLATION " + h1.message) << "\n";

  out << "hyperplane types (dims";
  for (int d : h1.histogram.dims) out << ' ' << d;
  out << "):\n";
  for (const auto& [b, count] : h1.histogram.s) {
    std::string bs;
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) bs += ',';
      bs += std::to_string(b[i]);
    }
    if (machine)
      out << "s_b " << bs << ' ' << count << '\n';
    else
      out << "  b=[" << bs << "]  s_b=" << count << '\n';
  }
  Rat avg = partition::average_b1(part);
  out << "average b_1 = " << boost::multiprecision::numerator(avg) << "/"
      << boost::multiprecision::denominator(avg) << "\n";

  if (per_hyperplane) {
    long long idx = 0;
    space::for_each_hyperplane(part.ctx, [&](const space::Subspace& h) {
      partition::HyperplaneProfile hp = partition::profile(part, h);
      out << "H " << idx++ << " b=[";
      bool first = true;
      for (const auto& [d, bd] : hp.b) {
        if (!first) out << ',';
        out << bd;
        first = false;
      }
      out << "]\n";
    });
  }
  return h0.ok && h1.ok ? 0 : 1;
}

int cmd_descent(unsigned q, int n, int t, std::ostream& out) {
  partition::DescentReport rep = partition::descent_certificate(q, n, t);
  for (const auto& line : rep.trace) out << line << "\n";
  if (rep.verdict == partition::DescentReport::Verdict::kHypothesisNotMet) {
    out << "HypothesisNotMet: " << rep.reason << "\n";
    return 0;
  }
  return rep.all_checks ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"maximum partial spreads of PG(n-1,q): bounds, constructions, "
               "verification, exhaustive search and partition analysis"};
  app.require_subcommand(1);

  unsigned q = 2;
  int n = 0, t = 1, sweep = 0;
  bool machine = false, paper_bounds = false, per_hyperplane = false;
  double time_limit = 0;
  std::string path;

  auto* b = app.add_subcommand("bounds", "lower/upper/exact values of mu_q(n,t)");
  b->add_option("--q", q, "field order")->required();
  b->add_option("--n", n, "ambient dimension")->required();
  b->add_option("--t", t, "member dimension")->required();
  b->add_option("--sweep", sweep, "print one row per n' in (t, NMAX]");
  b->add_flag("--machine", machine, "stable machine-readable rows");

  auto* c = app.add_subcommand("construct", "build a maximum-known partial spread file");
  c->add_option("--q", q)->required();
  c->add_option("--n", n)->required();
  c->add_option("--t", t)->required();
  c->add_option("-o,--output", path, "output spread file")->required();

  auto* v = app.add_subcommand("verify", "validate a spread file");
  v->add_option("file", path, "spread file")->required();

  auto* s = app.add_subcommand("search", "exact branch-and-bound maximum partial spread");
  s->add_option("--q", q)->required();
  s->add_option("--n", n)->required();
  s->add_option("--t", t)->required();
  s->add_option("--time-limit", time_limit, "seconds before returning best-so-far");
  s->add_flag("--use-paper-bounds", paper_bounds,
              "settle once the known exact value is reached");

  auto* a = app.add_subcommand("analyze", "partition identities and hyperplane histogram");
  a->add_option("file", path, "spread file")->required();
  a->add_flag("--hyperplanes", per_hyperplane, "print per-hyperplane profiles");
  a->add_flag("--machine", machine, "machine-readable s_b lines");

  auto* d = app.add_subcommand("descent", "averaging-descent certificate for mu_q(n,t) <= l q^t + 1");
  d->add_option("--q", q)->required();
  d->add_option("--n", n)->required();
  d->add_option("--t", t)->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (b->parsed()) return cmd_bounds(q, n, t, sweep, machine, out);
    if (c->parsed()) return cmd_construct(q, n, t, path, out, err);
    if (v->parsed()) return cmd_verify(path, out, err);
    if (s->parsed()) return cmd_search(q, n, t, time_limit, paper_bounds, out);
    if (a->parsed()) return cmd_analyze(path, per_hyperplane, machine, out, err);
    if (d->parsed()) return cmd_descent(q, n, t, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pspread::cli
