#include "besselrad/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "besselrad/asympt.hpp"
#include "besselrad/decimal.hpp"
#include "besselrad/error.hpp"
#include "besselrad/potpoly.hpp"
#include "besselrad/radii.hpp"

namespace besselrad::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  Table table;
  std::vector<std::string> warnings;
};

template <typename F>
auto parse_flag(const std::string& flag, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return Rational::parse(text); });
}

Rational parse_tolerance(const std::string& text) {
  const Rational tol = parse_rational("--tol", text);
  if (tol.sign() <= 0) throw UsageError("--tol: must be positive");
  return tol;
}

// Encloses by outward rounding; value is the correctly rounded midpoint.
json interval_json(const CertifiedInterval& iv, int digits) {
  return json{{"value", to_decimal(iv.midpoint(), digits)},
              {"uncertainty", to_decimal(iv.width() / 2, 3, Rounding::Up)},
              {"lo", to_decimal(iv.lo(), digits, Rounding::Down)},
              {"hi", to_decimal(iv.hi(), digits, Rounding::Up)},
              {"exact_lo", iv.lo().str()},
              {"exact_hi", iv.hi().str()}};
}

std::string format_double(double value, int digits) {
  return to_decimal(Rational::from_double(value), digits);
}

std::string uconv_g_warning(const Rational& nu, int digits) {
  std::string text =
      "uconv-g k=1 upper bound is the direct assembly omega_1/omega_2 = 4(nu+1)(nu+2)/(3(4nu+9)); the alternative "
      "closed form 4nu(nu+1)/(3(4nu-1))";
  if (nu > Rational(1, 4)) {
    text += " = " + to_decimal(uconv_g_alternative_upper(nu), digits) + " at this nu";
  } else {
    text += " is not a bound for nu <= 1/4";
  }
  return text + " is reported for comparison only";
}

struct RadiusArgs {
  std::string kind;
  std::string nu;
  std::string tol = "1e-12";
};

Output run_radius(const RadiusArgs& a, int digits) {
  const RadiusKind kind = parse_flag("--kind", [&] { return parse_kind(a.kind); });
  const Rational nu_value = parse_rational("--nu", a.nu);
  const Rational tol = parse_tolerance(a.tol);
  const Order nu(nu_value);
  const RadiusEnclosure r = direct_radius(kind, nu, tol);

  Output o;
  o.command = "radius";
  o.inputs = {{"kind", to_string(kind)}, {"nu", nu_value.str()}, {"tol", tol.str()}};
  o.results = {{"radius", interval_json(r.radius, digits)},
               {"zero", interval_json(r.zero, digits)},
               {"variable", traits(kind).squared ? "t = z^2" : "t = z"}};
  o.table.header = {"kind", "nu", "radius", "uncertainty", "lo", "hi"};
  const json& j = o.results["radius"];
  o.table.rows.push_back({std::string(to_string(kind)), nu_value.str(), j["value"], j["uncertainty"], j["lo"], j["hi"]});
  return o;
}

struct BoundsArgs {
  std::string kind;
  std::string nu;
  unsigned k = 0;
  unsigned k_max = 3;
};

Output run_bounds(const BoundsArgs& a, int digits) {
  const RadiusKind kind = parse_flag("--kind", [&] { return parse_kind(a.kind); });
  const Rational nu_value = parse_rational("--nu", a.nu);
  if (a.k_max == 0) throw UsageError("--k-max: must be positive");
  const Order nu(nu_value);
  const unsigned first = a.k == 0 ? 1 : a.k;
  const unsigned last = a.k == 0 ? a.k_max : a.k;

  Output o;
  o.command = "bounds";
  o.inputs = {{"kind", to_string(kind)}, {"nu", nu_value.str()}, {"k_min", first}, {"k_max", last}};
  o.table.header = {"k", "lower", "upper"};
  json rows = json::array();
  for (unsigned k = first; k <= last; ++k) {
    const BoundsBracket b = euler_rayleigh_bracket(kind, nu, k);
    const std::string lo = to_decimal(b.lower, digits, Rounding::Down);
    const std::string hi = to_decimal(b.upper, digits, Rounding::Up);
    rows.push_back({{"k", k},
                    {"lower", lo},
                    {"upper", hi},
                    {"lower_exact", b.lower_exact},
                    {"lower_power", b.lower_power.str()},
                    {"upper_exact", b.upper.str()}});
    o.table.rows.push_back({std::to_string(k), lo, hi});
  }
  o.results = {{"variable", traits(kind).squared ? "t = z^2" : "t = z"}, {"brackets", rows}};
  if (kind == RadiusKind::UConvG && first == 1) {
    o.warnings.push_back(uconv_g_warning(nu_value, digits));
    if (nu_value > Rational(1, 4)) {
      o.results["alternative_upper_k1"] = to_decimal(uconv_g_alternative_upper(nu_value), digits, Rounding::Up);
    }
  }
  return o;
}

struct RayleighArgs {
  std::string family;
  std::string nu;
  unsigned k_max = 5;
  std::string route = "newton";
};

Output run_rayleigh(const RayleighArgs& a, int digits) {
  const SeriesFamily family = parse_flag("--family", [&] { return parse_family(a.family); });
  const Rational nu_value = parse_rational("--nu", a.nu);
  if (a.k_max == 0) throw UsageError("--k-max: must be positive");
  if (a.route != "newton" && a.route != "potential") throw UsageError("--route: expected newton or potential");
  const Order nu(nu_value);
  const PowerSums s = a.route == "newton" ? power_sums(family, nu, a.k_max) : power_sums_via_potential(family, nu, a.k_max);

  Output o;
  o.command = "rayleigh";
  o.inputs = {{"family", to_string(family)}, {"nu", nu_value.str()}, {"k_max", a.k_max}, {"route", a.route}};
  o.table.header = {"k", "value", "exact"};
  json rows = json::array();
  for (std::size_t k = 1; k <= s.size(); ++k) {
    const std::string v = to_decimal(s.at(k), digits);
    rows.push_back({{"k", k}, {"value", v}, {"exact", s.at(k).str()}});
    o.table.rows.push_back({std::to_string(k), v, s.at(k).str()});
  }
  o.results = {{"power_sums", rows}};
  return o;
}

struct LaurentArgs {
  std::string family;
  unsigned k = 1;
  unsigned terms = 4;
};

Output run_laurent(const LaurentArgs& a, int digits) {
  const RayleighTarget target = parse_flag("--family", [&] { return parse_target(a.family); });
  if (a.k == 0) throw UsageError("--k: must be positive");
  const LaurentCoeffs c = target == RayleighTarget::Eta ? laurent_eta(a.k, a.terms) : laurent_theta(a.k, a.terms);

  Output o;
  o.command = "laurent";
  o.inputs = {{"family", to_string(target)}, {"k", a.k}, {"terms", a.terms}};
  o.table.header = {"n", "value", "exact"};
  json rows = json::array();
  for (std::size_t n = 0; n < c.coeffs.size(); ++n) {
    const std::string v = to_decimal(c.coeffs[n], digits);
    rows.push_back({{"n", n}, {"value", v}, {"exact", c.coeffs[n].str()}});
    o.table.rows.push_back({std::to_string(n), v, c.coeffs[n].str()});
  }
  o.results = {{"power", "nu^-(k+n)"}, {"coefficients", rows}};
  o.warnings.push_back("expansion converges for nu > " + std::to_string(a.k));
  return o;
}

struct AsymptArgs {
  std::string kind;
  unsigned terms = 2;
  unsigned trunc = kDefaultTruncation;
  std::string convention = "published";
  std::string nu;
};

Output run_asympt(const AsymptArgs& a, int digits) {
  const RadiusKind kind = parse_flag("--kind", [&] { return parse_kind(a.kind); });
  const Convention conv = parse_flag("--convention", [&] { return parse_convention(a.convention); });
  if (a.terms == 0) throw UsageError("--terms: must be positive");
  if (a.trunc < 3) throw UsageError("--trunc: must be at least 3");
  const AsymptoticExpansion e = asymptotic_expansion(kind, a.terms - 1, a.trunc, conv);

  Output o;
  o.command = "asympt";
  o.inputs = {{"kind", to_string(kind)}, {"terms", a.terms}, {"trunc", a.trunc}, {"convention", to_string(conv)}};
  o.table.header = {"term", "value", "uncertainty"};
  const std::string lead = to_decimal(e.leading_value(), digits);
  const std::string lead_unc = to_decimal(e.leading_uncertainty(), 3, Rounding::Up);
  o.results["leading"] = {{"value", lead}, {"uncertainty", lead_unc}};
  o.table.rows.push_back({"leading", lead, lead_unc});
  json eps = json::array();
  for (std::size_t n = 0; n < e.eps.size(); ++n) {
    const std::string v = to_decimal(e.eps[n].value, digits);
    const std::string u = to_decimal(e.eps[n].uncertainty, 3, Rounding::Up);
    eps.push_back({{"n", n + 1}, {"value", v}, {"uncertainty", u}});
    o.table.rows.push_back({"eps_" + std::to_string(n + 1), v, u});
  }
  o.results["eps"] = eps;
  o.results["form"] = traits(kind).squared ? "r^2 ~ nu (leading + sum eps_n / nu^n)" : "r ~ nu (leading + sum eps_n / nu^n)";
  if (!a.nu.empty()) {
    const Rational nu = parse_rational("--nu", a.nu);
    o.inputs["nu"] = nu.str();
    const std::string r = format_double(asymptotic_radius(e, nu, a.terms), digits);
    o.results["radius"] = r;
    o.table.rows.push_back({"radius", r, ""});
  }
  if (!traits(kind).squared && conv == Convention::Published) {
    o.warnings.push_back(
        "published convention scales the first theta row by 3/4; its leading constant is not the large-nu limit of the "
        "certified radius (use --convention consistent)");
  }
  return o;
}

struct CompareArgs {
  std::vector<std::string> kinds;
  std::vector<std::string> nus;
  unsigned terms = 2;
  unsigned k_max = 3;
  unsigned trunc = kDefaultTruncation;
  std::string tol = "1e-10";
  std::string convention = "published";
};

Output run_compare(const CompareArgs& a, int digits) {
  std::vector<RadiusKind> kinds;
  for (const std::string& k : a.kinds) {
    if (k == "all") {
      kinds.insert(kinds.end(), kAllKinds.begin(), kAllKinds.end());
    } else {
      kinds.push_back(parse_flag("--kind", [&] { return parse_kind(k); }));
    }
  }
  if (kinds.empty()) kinds.assign(kAllKinds.begin(), kAllKinds.end());
  std::vector<Rational> nus;
  for (const std::string& n : a.nus) nus.push_back(parse_rational("--nu", n));
  if (a.terms == 0) throw UsageError("--terms: must be positive");
  if (a.k_max == 0) throw UsageError("--k-max: must be positive");
  CompareOptions options;
  options.n_terms = a.terms;
  options.k_max = a.k_max;
  options.truncation = a.trunc;
  options.abs_tol = parse_tolerance(a.tol);
  options.convention = parse_flag("--convention", [&] { return parse_convention(a.convention); });
  for (const Rational& nu : nus) (void)Order(nu);

  const auto rows = compare_report(kinds, nus, options);

  Output o;
  o.command = "compare";
  json kind_names = json::array();
  for (RadiusKind k : kinds) kind_names.push_back(to_string(k));
  json nu_names = json::array();
  for (const Rational& nu : nus) nu_names.push_back(nu.str());
  o.inputs = {{"kinds", kind_names},   {"nu", nu_names},   {"terms", a.terms},
              {"k_max", a.k_max},      {"tol", options.abs_tol.str()},
              {"trunc", a.trunc},      {"convention", to_string(options.convention)}};
  o.table.header = {"kind", "nu", "radius", "uncertainty", "asymptotic", "abs_gap", "rel_gap"};
  for (unsigned k = 1; k <= a.k_max; ++k) {
    o.table.header.push_back("lower_" + std::to_string(k));
    o.table.header.push_back("upper_" + std::to_string(k));
  }
  o.table.header.push_back("invariants");

  json out_rows = json::array();
  bool uconv_g_k1 = false;
  for (const CompareRow& row : rows) {
    json brackets = json::array();
    std::vector<std::string> cells;
    const json radius = interval_json(row.oracle.radius, digits);
    cells = {std::string(to_string(row.kind)), row.nu.str(), radius["value"], radius["uncertainty"]};
    const std::string asym = row.asymptotic ? format_double(*row.asymptotic, digits) : "";
    const std::string abs_gap = row.asymptotic ? format_double(row.abs_gap, 4) : "";
    const std::string rel_gap = row.asymptotic ? format_double(row.rel_gap, 4) : "";
    cells.insert(cells.end(), {asym, abs_gap, rel_gap});
    for (const BoundsBracket& b : row.brackets) {
      const std::string lo = to_decimal(b.lower, digits, Rounding::Down);
      const std::string hi = to_decimal(b.upper, digits, Rounding::Up);
      brackets.push_back({{"k", b.k}, {"lower", lo}, {"upper", hi}});
      cells.push_back(lo);
      cells.push_back(hi);
    }
    cells.push_back(row.invariants_hold ? "ok" : "violated");
    o.table.rows.push_back(std::move(cells));
    json r = {{"kind", to_string(row.kind)},
              {"nu", row.nu.str()},
              {"oracle", radius},
              {"zero", interval_json(row.oracle.zero, digits)},
              {"brackets", brackets}};
    r["asymptotic"] = row.asymptotic ? json(asym) : json(nullptr);
    r["abs_gap"] = row.asymptotic ? json(abs_gap) : json(nullptr);
    r["rel_gap"] = row.asymptotic ? json(rel_gap) : json(nullptr);
    r["invariants_hold"] = row.invariants_hold;
    r["notes"] = row.notes;
    out_rows.push_back(std::move(r));
    uconv_g_k1 = uconv_g_k1 || row.kind == RadiusKind::UConvG;
  }
  o.results = {{"rows", out_rows}};
  if (uconv_g_k1) o.warnings.push_back(uconv_g_warning(nus.front(), digits));
  return o;
}

struct BoundaryArgs {
  std::string map;
  std::string nu;
  std::string radius = "oracle";
  std::string kind;
  unsigned samples = 720;
};

Output run_boundary(const BoundaryArgs& a, int digits) {
  const BesselMap map = parse_flag("--map", [&] { return parse_map(a.map); });
  const Rational nu_value = parse_rational("--nu", a.nu);
  if (a.samples < 8) throw UsageError("--samples: must be at least 8");
  RadiusKind kind = map == BesselMap::G ? RadiusKind::ConvG : RadiusKind::ConvH;
  if (!a.kind.empty()) {
    kind = parse_flag("--kind", [&] { return parse_kind(a.kind); });
    if (traits(kind).squared != (map == BesselMap::G)) throw UsageError("--kind: does not belong to map " + a.map);
  }
  const Order nu(nu_value);

  Rational r;
  std::string source = a.radius;
  if (a.radius == "oracle") {
    r = direct_radius(kind, nu, Rational::pow10(-12)).radius.midpoint();
  } else if (a.radius.rfind("asympt:", 0) == 0) {
    const std::string count = a.radius.substr(7);
    unsigned terms = 0;
    try {
      terms = static_cast<unsigned>(std::stoul(count));
    } catch (const std::exception&) {
      throw UsageError("--radius: bad term count '" + count + "'");
    }
    if (terms == 0) throw UsageError("--radius: term count must be positive");
    r = Rational::from_double(asymptotic_radius(kind, nu_value, terms));
  } else if (a.radius.rfind("explicit:", 0) == 0) {
    r = parse_rational("--radius", a.radius.substr(9));
    if (r.sign() < 0) throw UsageError("--radius: must be non-negative");
  } else {
    throw UsageError("--radius: expected oracle, asympt:<terms> or explicit:<value>");
  }

  Output o;
  o.command = "boundary";
  o.inputs = {{"map", to_string(map)},
              {"kind", to_string(kind)},
              {"nu", nu_value.str()},
              {"radius_source", source},
              {"samples", a.samples}};
  o.table.header = {"theta", "re", "im"};
  const Rational tol = Rational::pow10(-8);
  json rows = json::array();
  for (unsigned j = 0; j < a.samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / a.samples;
    const ComplexRational z{r * Rational::from_double(std::cos(theta)), r * Rational::from_double(std::sin(theta))};
    const ComplexRectangle w = map_point(map, nu, z, tol);
    std::vector<std::string> cells = {format_double(theta, digits), to_decimal(w.re.midpoint(), digits),
                                      to_decimal(w.im.midpoint(), digits)};
    rows.push_back(cells);
    o.table.rows.push_back(std::move(cells));
  }
  o.results = {{"radius", to_decimal(r, digits)}, {"columns", o.table.header}, {"rows", rows}};
  return o;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_output(const Output& o, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    json doc = {{"command", o.command}, {"inputs", o.inputs}, {"results", o.results}, {"warnings", o.warnings}};
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
      out << '\n';
    };
    line(o.table.header);
    for (const auto& row : o.table.rows) line(row);
    for (const auto& w : o.warnings) err << "warning: " << w << '\n';
    return;
  }
  std::vector<std::size_t> width(o.table.header.size(), 0);
  auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(o.table.header);
  for (const auto& row : o.table.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(o.table.header);
  for (const auto& row : o.table.rows) line(row);
  for (const auto& w : o.warnings) out << "warning: " << w << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radii of convexity and uniform convexity of normalized Bessel functions"};
  app.name("besselrad");
  app.require_subcommand(1);

  std::string format;
  int digits = 10;
  std::string out_file;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--digits", digits, "significant digits (default 10)")->check(CLI::Range(1, 200));
    sub->add_option("--out", out_file, "write results to FILE instead of standard output");
  };

  RadiusArgs radius_args;
  auto* radius = app.add_subcommand("radius", "certified radius by direct root isolation");
  radius->add_option("--kind", radius_args.kind, "conv-g, conv-h, uconv-g or uconv-h")->required();
  radius->add_option("--nu", radius_args.nu, "order nu > -1 (integer, decimal or p/q)")->required();
  radius->add_option("--tol", radius_args.tol, "absolute tolerance on the radius (default 1e-12)");
  add_common(radius);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Euler-Rayleigh brackets of the smallest zero");
  bounds->add_option("--kind", bounds_args.kind, "radius kind")->required();
  bounds->add_option("--nu", bounds_args.nu, "order nu")->required();
  bounds->add_option("--k", bounds_args.k, "single order k");
  bounds->add_option("--k-max", bounds_args.k_max, "orders 1..k-max (default 3)");
  add_common(bounds);

  RayleighArgs rayleigh_args;
  auto* rayleigh = app.add_subcommand("rayleigh", "exact power sums of reciprocal zeros");
  rayleigh->add_option("--family", rayleigh_args.family, "series family, e.g. ConvexG or WeierstrassH")->required();
  rayleigh->add_option("--nu", rayleigh_args.nu, "order nu")->required();
  rayleigh->add_option("--k-max", rayleigh_args.k_max, "number of sums (default 5)");
  rayleigh->add_option("--route", rayleigh_args.route, "newton or potential (default newton)");
  add_common(rayleigh);

  LaurentArgs laurent_args;
  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients of eta_k or theta_k in 1/nu");
  laurent->add_option("--family", laurent_args.family, "eta or theta")->required();
  laurent->add_option("--k", laurent_args.k, "which sum (default 1)");
  laurent->add_option("--terms", laurent_args.terms, "highest coefficient index N (default 4)");
  add_common(laurent);

  AsymptArgs asympt_args;
  auto* asympt = app.add_subcommand("asympt", "large-nu expansion of a radius");
  asympt->add_option("--kind", asympt_args.kind, "radius kind")->required();
  asympt->add_option("--terms", asympt_args.terms, "leading constant plus terms-1 corrections (default 2)");
  asympt->add_option("--trunc", asympt_args.trunc, "truncation M of the Rayleigh sums (default 20)");
  asympt->add_option("--convention", asympt_args.convention, "published or consistent (default published)");
  asympt->add_option("--nu", asympt_args.nu, "also evaluate the truncated radius at this nu");
  add_common(asympt);

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "oracle, brackets and asymptotics side by side");
  compare->add_option("--kind", compare_args.kinds, "kinds (repeatable or comma separated; default all)")
      ->delimiter(',');
  compare->add_option("--nu", compare_args.nus, "orders (repeatable or comma separated)")->delimiter(',')->required();
  compare->add_option("--terms", compare_args.terms, "asymptotic terms (default 2)");
  compare->add_option("--k-max", compare_args.k_max, "bracket orders 1..k-max (default 3)");
  compare->add_option("--trunc", compare_args.trunc, "truncation M (default 20)");
  compare->add_option("--tol", compare_args.tol, "oracle tolerance (default 1e-10)");
  compare->add_option("--convention", compare_args.convention, "published or consistent");
  add_common(compare);

  BoundaryArgs boundary_args;
  auto* boundary = app.add_subcommand("boundary", "image of the circle |z| = r under g_nu or h_nu");
  boundary->add_option("--map", boundary_args.map, "g or h")->required();
  boundary->add_option("--nu", boundary_args.nu, "order nu")->required();
  boundary->add_option("--radius", boundary_args.radius, "oracle, asympt:<terms> or explicit:<value>");
  boundary->add_option("--kind", boundary_args.kind, "radius kind for oracle/asympt (default conv-g or conv-h)");
  boundary->add_option("--samples", boundary_args.samples, "number of angles (>= 8, default 720)");
  add_common(boundary);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("besselrad");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Output o;
    std::string default_format = "json";
    if (radius->parsed()) {
      o = run_radius(radius_args, digits);
    } else if (bounds->parsed()) {
      o = run_bounds(bounds_args, digits);
    } else if (rayleigh->parsed()) {
      o = run_rayleigh(rayleigh_args, digits);
    } else if (laurent->parsed()) {
      o = run_laurent(laurent_args, digits);
    } else if (asympt->parsed()) {
      o = run_asympt(asympt_args, digits);
    } else if (compare->parsed()) {
      o = run_compare(compare_args, digits);
    } else {
      o = run_boundary(boundary_args, digits);
      default_format = "csv";
    }
    const std::string fmt = format.empty() ? default_format : format;
    if (out_file.empty()) {
      write_output(o, fmt, out, err);
    } else {
      std::ofstream file(out_file);
      if (!file) throw UsageError("--out: cannot open '" + out_file + "'");
      write_output(o, fmt, file, err);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace besselrad::cli
