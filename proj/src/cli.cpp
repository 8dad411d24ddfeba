#include "ordcx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordcx/convergence.hpp"
#include "ordcx/counterexamples.hpp"
#include "ordcx/diffcheck.hpp"
#include "ordcx/errors.hpp"
#include "ordcx/extended.hpp"
#include "ordcx/family.hpp"
#include "ordcx/literal.hpp"

namespace ordcx::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoefficientFamily load_family(const std::string& path) {
  try {
    return parse_family(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::string compact(const ComplexElement& z) {
  if (z.is_finite() && z.model().dimension() == 1) return format_complex(z[0]);
  return format_element(z);
}

int cmd_radius(const std::string& file, std::ostream& out) {
  out << format_radius_report(cauchy_hadamard(load_family(file)));
  return kExitOk;
}

int cmd_decompose(const std::string& literal, std::ostream& out) {
  const ExtendedPositive u = parse_extended(literal);
  const auto d = three_part_decompose(u);
  out << "u_F=" << format_element(finite_part(u)) << " u_inf=" << format_extended(infinite_part(u))
      << " bands: " << d.finite_band.to_string() << "|" << d.infinite_band.to_string() << "|"
      << d.disjoint_band.to_string() << "\n";
  return kExitOk;
}

struct DiffOptions {
  std::string expr, point, radius;
  unsigned depth = kDefaultCheckDepth;
  double tol = kDefaultCheckTolerance;
};

int cmd_diff_check(const DiffOptions& o, std::ostream& out) {
  const Expr f = parse_expr(o.expr);
  const ComplexElement c = parse_element(o.point);
  std::optional<RealElement> r;
  if (!o.radius.empty()) r = parse_real_element(o.radius);
  const auto rep = difference_quotient_check(f, c, r, o.depth, o.tol);
  out << "f=" << to_string(f) << "\n";
  out << "f'=" << to_string(symbolic_derivative(f)) << "\n";
  out << format_check_report(rep);
  return rep.pass() ? kExitOk : kExitFail;
}

struct SeriesOptions {
  std::string file, center, point;
  double tol = kDefaultTailTolerance;
};

int cmd_series(const SeriesOptions& o, std::ostream& out) {
  const CoefficientFamily fam = load_family(o.file);
  const ComplexElement c = parse_element(o.center);
  const ComplexElement z = parse_element(o.point);
  const SeriesValue v = evaluate_series(fam, c, z, o.tol);
  out << to_string(v.verdict.membership) << "\n";
  out << "L*r=" << format_extended(v.verdict.product) << "\n";
  switch (v.verdict.membership) {
    case Membership::In:
      out << "value=" << compact(v.value) << "\n";
      out << "cutoff=" << v.verdict.cutoff << " tail<=" << format_double(v.verdict.tail_bound)
          << "\n";
      out << "terms=" << v.terms << "\n";
      break;
    case Membership::Out:
      if (v.verdict.witness_coordinate) out << "witness coordinate=" << *v.verdict.witness_coordinate;
      if (v.verdict.witness_index) out << " index=" << *v.verdict.witness_index;
      out << "\n";
      break;
    case Membership::Boundary:
      break;
  }
  return kExitOk;
}

int cmd_counterexamples(const std::string& name, std::ostream& out) {
  std::vector<CounterexampleReport> reports;
  try {
    reports = run_counterexamples(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) + "; expected one of all, shift, swap, fkl-net, linf-sigma, disk-open");
  }
  bool ok = true;
  for (const auto& r : reports) {
    out << format_counterexample(r);
    ok = ok && r.reproduced;
  }
  return ok ? kExitOk : kExitFail;
}

struct HoloOptions {
  std::string target, center, radius, series_center;
  bool family = false;
  std::size_t samples = 25;
  std::uint64_t seed = 0;
  unsigned depth = kDefaultCheckDepth;
  double tol = kDefaultCheckTolerance;
};

int cmd_holomorphy(const HoloOptions& o, std::ostream& out) {
  const ComplexElement c = parse_element(o.center);
  const OrderDisk region = o.radius.find("inf") == std::string::npos
                               ? OrderDisk::open_disk(c, parse_real_element(o.radius))
                               : OrderDisk::open_disk(c, parse_extended(o.radius));
  HolomorphyReport rep;
  if (o.family) {
    const ComplexElement sc = o.series_center.empty() ? c : parse_element(o.series_center);
    rep = holomorphy_report(load_family(o.target), sc, region, o.samples, o.depth, o.tol, o.seed);
  } else {
    rep = holomorphy_report(parse_expr(o.target), region, o.samples, o.depth, o.tol, o.seed);
  }
  out << "samples=" << rep.samples << " passed=" << rep.passed << " seed=" << o.seed << "\n";
  if (!rep.failure.empty()) out << "first failure: " << rep.failure << "\n";
  out << (rep.pass() ? "PASS" : "FAIL") << "\n";
  return rep.pass() ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order complex analysis in finite and eventually constant models", "ordcx"};
  app.require_subcommand(1);

  std::string radius_file;
  auto* radius = app.add_subcommand("radius", "Cauchy-Hadamard radius of a coefficient family file");
  radius->add_option("file", radius_file, "family description")->required();

  std::string literal;
  auto* decompose = app.add_subcommand("decompose", "split an extended positive element into finite and infinite parts");
  decompose->add_option("literal", literal, "e.g. [2, inf, 0]")->required();

  DiffOptions diff;
  auto* diffcheck = app.add_subcommand("diff-check", "difference-quotient check of the symbolic derivative");
  diffcheck->add_option("expr", diff.expr, "expression in z")->required();
  diffcheck->add_option("point", diff.point, "element literal")->required();
  diffcheck->add_option("--radius", diff.radius, "positive invertible radius literal");
  diffcheck->add_option("--depth", diff.depth, "halving steps")->check(CLI::PositiveNumber);
  diffcheck->add_option("--tol", diff.tol, "final ratio tolerance")->check(CLI::PositiveNumber);

  SeriesOptions series;
  auto* ser = app.add_subcommand("series", "evaluate a power series at a point");
  ser->add_option("file", series.file, "family description")->required();
  ser->add_option("center", series.center, "center literal")->required();
  ser->add_option("point", series.point, "point literal")->required();
  ser->add_option("--tol", series.tol, "uniform tail tolerance")->check(CLI::PositiveNumber);

  auto* cx = app.add_subcommand("counterexamples", "reproduce the counterexamples");
  std::string cx_name = "all";
  auto* cx_run = cx->add_subcommand("run", "run one reproduction or all of them");
  cx_run->add_option("name", cx_name, "all, shift, swap, fkl-net, linf-sigma or disk-open");
  cx->require_subcommand(1);

  HoloOptions holo;
  auto* hol = app.add_subcommand("holomorphy", "derivative checks at seeded sample points of an open disk");
  hol->add_option("target", holo.target, "expression, or family file with --family")->required();
  hol->add_option("center", holo.center, "disk center literal")->required();
  hol->add_option("radius", holo.radius, "disk radius literal, inf allowed")->required();
  hol->add_flag("--family", holo.family, "treat target as a family file");
  hol->add_option("--series-center", holo.series_center, "series center (defaults to the disk center)");
  hol->add_option("--samples", holo.samples, "sample count")->check(CLI::PositiveNumber);
  hol->add_option("--seed", holo.seed, "sampling seed");
  hol->add_option("--depth", holo.depth, "halving steps")->check(CLI::PositiveNumber);
  hol->add_option("--tol", holo.tol, "final ratio tolerance")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*radius) return cmd_radius(radius_file, out);
    if (*decompose) return cmd_decompose(literal, out);
    if (*diffcheck) return cmd_diff_check(diff, out);
    if (*ser) return cmd_series(series, out);
    if (*cx) return cmd_counterexamples(cx_name, out);
    if (*hol) return cmd_holomorphy(holo, out);
  } catch (const OutsideDomain& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotInvertible& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OutsideOpenDisk& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ordcx::cli
