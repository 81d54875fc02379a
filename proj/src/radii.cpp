#include "besselrad/radii.hpp"

#include <cmath>
#include <future>
#include <map>

#include "besselrad/bisection.hpp"
#include "besselrad/error.hpp"
#include "besselrad/rayleigh.hpp"

namespace besselrad {

namespace {

constexpr unsigned kLowerBits = 100;

Rational dyadic_floor(const Rational& x, unsigned bits) {
  return Rational((x * Rational::pow2(bits)).floor(), Integer(1)) / Rational::pow2(bits);
}

Rational dyadic_ceil(const Rational& x, unsigned bits) {
  return Rational((x * Rational::pow2(bits)).ceil(), Integer(1)) / Rational::pow2(bits);
}

}  // namespace

BoundsBracket euler_rayleigh_bracket(SeriesFamily family, const Order& nu, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const PowerSums s = power_sums(family, nu, k + 1);
  const Rational lower_power = s.at(k).reciprocal();
  const RootEnclosure root = kth_root(lower_power, k, kLowerBits);
  return {family, nu.value(), k, root.lo, s.at(k) / s.at(k + 1), lower_power, root.exact};
}

BoundsBracket euler_rayleigh_bracket(RadiusKind kind, const Order& nu, unsigned k) {
  return euler_rayleigh_bracket(traits(kind).critical, nu, k);
}

Rational uconv_g_alternative_upper(const Rational& nu) {
  return Rational(4) * nu * (nu + Rational(1)) / (Rational(3) * (Rational(4) * nu - Rational(1)));
}

RadiusEnclosure direct_radius(RadiusKind kind, const Order& nu, const Rational& abs_tol) {
  if (abs_tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const KindTraits& tr = traits(kind);
  const BoundsBracket b = euler_rayleigh_bracket(tr.critical, nu, 3);

  // For g-kinds dr = dt / (2 sqrt t), so a t-width of abs_tol * sqrt(t_lo)
  // leaves half the budget for rounding the square root.
  Rational t_goal = abs_tol;
  unsigned root_bits = 0;
  if (tr.squared) {
    t_goal = abs_tol * kth_root(b.lower, 2, 64).lo;
    root_bits = ceil_log2_ratio(Rational(4), abs_tol);
  }
  if (t_goal.is_zero()) throw Error(ErrorKind::InvalidArgument, "degenerate bracket for nu = " + nu.value().str());
  const unsigned bits = std::max(64U, ceil_log2_ratio(Rational(1), t_goal) + 8);
  const CertifiedInterval start(dyadic_floor(b.lower, bits), dyadic_ceil(b.upper, bits));

  const SeriesFamily family = tr.critical;
  const SignOracle oracle = [&](const Rational& t) { return sign_at(family, nu, t); };
  CertifiedInterval zero = bisect_smallest_root(oracle, start, t_goal);

  if (!tr.squared) return {kind, nu.value(), zero, zero};
  CertifiedInterval radius(kth_root(zero.lo(), 2, root_bits).lo, kth_root(zero.hi(), 2, root_bits).hi);
  return {kind, nu.value(), std::move(zero), std::move(radius)};
}

Rational mittag_leffler_residual(RadiusKind kind, const Order& nu, const Rational& r, unsigned m) {
  const KindTraits& tr = traits(kind);
  if (r.sign() < 0) throw Error(ErrorKind::ConvergenceDomain, "residual needs r >= 0");
  const BoundsBracket limit = euler_rayleigh_bracket(tr.weierstrass, nu, 2);
  // r < S_2^(-1/2) exactly iff r^2 S_2 < 1.
  if (r * r >= limit.lower_power) {
    throw Error(ErrorKind::ConvergenceDomain,
                "r = " + r.str() + " is not below the smallest Weierstrass zero bound " + limit.lower.str());
  }
  if (m == 0) return Rational(1);
  const PowerSums s = power_sums(tr.weierstrass, nu, m);
  Rational sum(0);
  Rational r_pow(1);
  for (unsigned i = 1; i <= m; ++i) {
    r_pow *= r;
    sum += r_pow * s.at(i);
  }
  return Rational(1) - Rational(tr.weight) * sum;
}

namespace {

CompareRow build_row(RadiusKind kind, const Rational& nu_value, const CompareOptions& options,
                     const AsymptoticExpansion* expansion) {
  const Order nu(nu_value);
  CompareRow row{kind, nu_value, {}, direct_radius(kind, nu, options.abs_tol), std::nullopt, 0, 0, {}, true};
  for (unsigned k = 1; k <= options.k_max; ++k) row.brackets.push_back(euler_rayleigh_bracket(kind, nu, k));

  auto note = [&row](bool ok, const std::string& text) {
    row.notes.push_back((ok ? "ok: " : "VIOLATION: ") + text);
    if (!ok) row.invariants_hold = false;
  };
  bool inside = true;
  bool nested = true;
  for (std::size_t i = 0; i < row.brackets.size(); ++i) {
    const BoundsBracket& b = row.brackets[i];
    inside = inside && b.lower < row.oracle.zero.lo() && row.oracle.zero.hi() < b.upper;
    if (i > 0) {
      const BoundsBracket& prev = row.brackets[i - 1];
      nested = nested && prev.lower < b.lower && b.upper < prev.upper;
    }
  }
  note(inside, "oracle inside every bracket");
  if (row.brackets.size() > 1) note(nested, "brackets strictly nested");

  if (expansion != nullptr && nu_value.sign() > 0) {
    try {
      const double a = asymptotic_radius(*expansion, nu_value, options.n_terms);
      const double oracle = row.oracle.radius.midpoint().to_double();
      row.asymptotic = a;
      row.abs_gap = std::abs(a - oracle);
      row.rel_gap = row.abs_gap / oracle;
    } catch (const Error& e) {
      row.notes.push_back(std::string("asymptotic unavailable: ") + e.what());
    }
  }
  return row;
}

}  // namespace

std::vector<CompareRow> compare_report(const std::vector<RadiusKind>& kinds, const std::vector<Rational>& nus,
                                       const CompareOptions& options) {
  if (nus.empty() || kinds.empty()) return {};
  if (options.n_terms == 0) throw Error(ErrorKind::InvalidArgument, "at least one term is required");

  std::map<RadiusKind, AsymptoticExpansion> expansions;
  for (RadiusKind kind : kinds) {
    if (!expansions.count(kind)) {
      expansions.emplace(kind, asymptotic_expansion(kind, options.n_terms - 1, options.truncation, options.convention));
    }
  }

  std::vector<std::future<CompareRow>> pending;
  for (RadiusKind kind : kinds) {
    for (const Rational& nu : nus) {
      const AsymptoticExpansion* e = &expansions.at(kind);
      pending.push_back(std::async(std::launch::async, [kind, nu, &options, e] { return build_row(kind, nu, options, e); }));
    }
  }
  std::vector<CompareRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());

  for (CompareRow& row : rows) {
    if (!is_uniform(row.kind)) continue;
    for (const CompareRow& other : rows) {
      if (other.kind == uniform_partner(row.kind) && other.nu == row.nu) {
        const bool ok = row.oracle.radius.hi() < other.oracle.radius.lo();
        row.notes.push_back(std::string(ok ? "ok: " : "VIOLATION: ") + "r^uc < r^c");
        if (!ok) row.invariants_hold = false;
        break;
      }
    }
  }
  return rows;
}

}  // namespace besselrad
