#include "micz/params.hpp"

#include <cmath>
#include <sstream>

namespace micz {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Flat: return "flat";
    case Geometry::Sphere: return "sphere";
    case Geometry::Hyperboloid: return "hyperboloid";
  }
  return "?";
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "invalid state:";
        for (const auto& v : violations) os << " [" << v << "]";
        return os.str();
      }()),
      violations_(std::move(violations)) {}

HalfInt m_plus_of(HalfInt m, HalfInt s) {
  return HalfInt{((m + s).abs().twice + (m - s).abs().twice) / 2};
}

double delta_of(const PhysParams& p, HalfInt m) {
  const HalfInt d1 = (m - p.s).abs();
  const HalfInt d2 = (m + p.s).abs();
  double m1 = p.lambda1 > 0.0 ? std::sqrt(d1.value() * d1.value() + p.coupling1()) : d1.value();
  double m2 = p.lambda2 > 0.0 ? std::sqrt(d2.value() * d2.value() + p.coupling2()) : d2.value();
  // Exact halves first; the irrational part enters only through the sqrt.
  return 0.5 * (m1 + m2) - m_plus_of(m, p.s).value();
}

std::vector<std::string> validate(const PhysParams& p, const QuantumNumbers& q) {
  std::vector<std::string> bad;
  if (!(p.mu > 0.0)) bad.push_back("mu must be positive");
  if (!(p.hbar > 0.0)) bad.push_back("hbar must be positive");
  if (p.e2 < 0.0) bad.push_back("e2 must be nonnegative");
  if (p.lambda1 < 0.0) bad.push_back("lambda1 must be nonnegative");
  if (p.lambda2 < 0.0) bad.push_back("lambda2 must be nonnegative");
  if (p.geometry != Geometry::Flat && !(p.r_curv > 0.0))
    bad.push_back("r_curv must be positive for curved geometry");
  if (!bad.empty()) return bad;

  const HalfInt ms = q.m - p.s;
  if (!ms.is_integer())
    bad.push_back("m - s must be an integer (single-valuedness of the phi phase)");

  const HalfInt ns = q.n - p.s.abs();
  if (!ns.is_integer() || ns.as_int() < 1)
    bad.push_back("n - |s| must be a positive integer");

  const HalfInt mp = m_plus_of(q.m, p.s);
  const HalfInt jm = q.j - mp;
  if (!jm.is_integer() || jm.as_int() < 0)
    bad.push_back("j - m_plus must be a nonnegative integer");

  const HalfInt nj = q.n - q.j;
  if (!nj.is_integer() || nj.as_int() < 1) bad.push_back("j must not exceed n - 1");

  if (q.m.abs() > q.j) bad.push_back("|m| must not exceed j");

  if (bad.empty() && p.geometry == Geometry::Hyperboloid) {
    if (p.e2 <= 0.0) {
      bad.push_back("e2 must be positive for hyperboloid bound states");
    } else {
      const double nd = q.n.value() + delta_of(p, q.m);
      const double ratio = p.r_curv / p.bohr_radius();
      if (!(nd * nd < ratio)) {
        std::ostringstream os;
        os << "no bound state: normalizability requires (n+delta)^2 < R0/r0, got n=" << q.n.value()
           << " delta=" << delta_of(p, q.m) << " sigma=" << ratio / nd << " <= n+delta=" << nd;
        bad.push_back(os.str());
      }
    }
  }
  return bad;
}

DerivedNotation derive_notation(const PhysParams& p, const QuantumNumbers& q) {
  if (auto bad = validate(p, q); !bad.empty()) throw ValidationError(std::move(bad));

  DerivedNotation d;
  const HalfInt d1 = (q.m - p.s).abs();
  const HalfInt d2 = (q.m + p.s).abs();
  d.m1 = p.lambda1 > 0.0 ? std::sqrt(d1.value() * d1.value() + p.coupling1()) : d1.value();
  d.m2 = p.lambda2 > 0.0 ? std::sqrt(d2.value() * d2.value() + p.coupling2()) : d2.value();
  d.m_plus = m_plus_of(q.m, p.s);
  d.delta = 0.5 * (d.m1 + d.m2) - d.m_plus.value();
  d.j_tilde = q.j.value() + d.delta;

  const double nd = q.n.value() + d.delta;
  if (p.e2 > 0.0) {
    const double r0 = p.bohr_radius();
    if (p.geometry == Geometry::Flat) {
      d.kappa = 1.0 / (r0 * nd);
    } else {
      d.sigma = p.r_curv / (r0 * nd);
    }
  }
  return d;
}

std::vector<QuantumNumbers> enumerate_states(const PhysParams& p, HalfInt n_max) {
  std::vector<QuantumNumbers> out;
  for (HalfInt n = p.s.abs() + HalfInt::from_int(1); n <= n_max; n += HalfInt::from_int(1)) {
    // m runs over values with m - s integer and |m| <= n - 1.
    const HalfInt lim = n - HalfInt::from_int(1);
    for (HalfInt m = -lim; m <= lim; m += HalfInt::from_int(1)) {
      if (!(m - p.s).is_integer()) continue;
      // The hyperboloid bound-state condition is reported separately, so the
      // enumeration itself checks range rules only.
      PhysParams range_only = p;
      range_only.geometry = Geometry::Flat;
      for (HalfInt j = m_plus_of(m, p.s); j <= lim; j += HalfInt::from_int(1)) {
        QuantumNumbers q{n, j, m};
        if (validate(range_only, q).empty()) out.push_back(q);
      }
    }
  }
  return out;
}

}  // namespace micz
