#include "strandbox/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strandbox/errors.hpp"

namespace strandbox {

namespace {

std::string vec_text(const RootVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool is_delta_multiple(const RootVector& x, const RootVector& d, long long& m) {
  if (x.empty() || d[0] == 0) return false;
  m = x[0] / d[0];
  if (m <= 0) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != m * d[i]) return false;
  }
  return true;
}

void require_type_c(const Presentation& p) {
  if (!p.is_type_c()) throw DomainError("root checks need a type C presentation");
}

// Walks a tau-orbit from start, keeping members of height <= bound. Heights
// in these orbits grow without bound, so the walk ends after a run of
// over-bound members.
void collect_orbit(const Presentation& p, ModuleRef x, int direction, long long bound,
                   WitnessFamily family, std::map<RootVector, std::vector<Witness>>& out) {
  const int patience = 2 * p.n();
  int over = 0;
  while (!x.is_zero() && over < patience) {
    RootVector r = rank_vector(p, x);
    if (height(r) <= bound) {
      out[r].push_back({family, x, 0, 0});
      over = 0;
    } else {
      ++over;
    }
    x = tau_power(p, x, direction);
  }
}

}  // namespace

std::string to_string(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::Preprojective: return "preprojective";
    case WitnessFamily::Preinjective: return "preinjective";
    case WitnessFamily::Tube: return "tube";
    case WitnessFamily::Band: return "band";
  }
  return "?";
}

std::map<RootVector, std::vector<Witness>> tau_locally_free_rank_vectors(const Presentation& p,
                                                                         long long bound) {
  require_type_c(p);
  std::map<RootVector, std::vector<Witness>> out;
  if (bound < 1) return out;
  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    collect_orbit(p, ModuleRef::string(p, projective_string(p, i)), -1, bound,
                  WitnessFamily::Preprojective, out);
    collect_orbit(p, ModuleRef::string(p, injective_string(p, i)), 1, bound,
                  WitnessFamily::Preinjective, out);
  }

  const long long d = height(delta(n));
  const int levels = static_cast<int>((bound / d + 1) * (n - 1));
  const auto tube = tube_levels(p, levels);
  for (size_t l = 0; l < tube.size(); ++l) {
    for (const auto& m : tube[l]) {
      RootVector r = rank_vector(p, m);
      if (height(r) <= bound) out[r].push_back({WitnessFamily::Tube, m, static_cast<int>(l + 1), 0});
    }
  }

  const int max_dl = static_cast<int>(bound / d);
  if (max_dl >= 1) {
    for (const auto& b : enumerate_bands(p, max_dl)) {
      const int t = delta_length(p, b);
      for (int s = 1; t * s * d <= bound; ++s) {
        for (int l = 1; t * s * l * d <= bound; ++l) {
          ModuleRef m = ModuleRef::band(p, b, s, l);
          out[rank_vector(p, m)].push_back({WitnessFamily::Band, m, l, t});
        }
      }
    }
  }
  return out;
}

bool is_tau_locally_free(const Presentation& p, const ModuleRef& m, int window) {
  if (m.is_zero()) return true;
  if (!is_locally_free(p, m)) return false;
  for (int direction : {1, -1}) {
    ModuleRef x = m;
    for (int k = 0; k < window; ++k) {
      x = tau_power(p, x, direction);
      if (x.is_zero()) break;
      if (!is_locally_free(p, x)) return false;
    }
  }
  return true;
}

GLSReport check_gls(const Presentation& p, long long bound, int window) {
  require_type_c(p);
  GLSReport r;
  r.n = p.n();
  r.orientation = p.type_c_orientation().to_string();
  r.bound = bound;

  const CartanData cd = cartan(p.n());
  const RootVector d = delta(p.n());
  const std::set<RootVector> roots = enumerate_positive_roots(cd, bound);
  const auto witnesses = tau_locally_free_rank_vectors(p, bound);

  for (const auto& [rank, ws] : witnesses) {
    for (const auto& w : ws) {
      if (!is_tau_locally_free(p, w.module, window)) {
        r.not_tau_locally_free.push_back(format_module(p, w.module));
      }
    }
    if (!roots.count(rank)) {
      r.extra.push_back(rank);
      continue;
    }
    long long m = 0;
    if (!is_delta_multiple(rank, d, m)) {
      if (ws.size() != 1) r.ambiguous.push_back(rank);
      r.real.emplace(rank, ws.front());
      continue;
    }
    r.imaginary[rank] = ws;
    // The tube contributes its n-1 modules of quasi-length m(n-1), and bands
    // of delta-length t, degree s at level l contribute whenever t*s*l = m.
    int tube_count = 0;
    bool tube_levels_ok = true;
    for (const auto& w : ws) {
      if (w.family != WitnessFamily::Tube) continue;
      ++tube_count;
      tube_levels_ok = tube_levels_ok && w.level == m * (p.n() - 1);
    }
    bool bands_ok = true;
    for (long long t = 1; t <= m; ++t) {
      for (long long s = 1; t * s <= m; ++s) {
        if (m % (t * s)) continue;
        const long long l = m / (t * s);
        bool found = std::any_of(ws.begin(), ws.end(), [&](const Witness& w) {
          return w.family == WitnessFamily::Band && w.dl == t && w.module.degree == s &&
                 w.level == l;
        });
        bands_ok = bands_ok && found;
      }
    }
    if (tube_count != p.n() - 1 || !tube_levels_ok || !bands_ok) r.thin_imaginary.push_back(rank);
  }
  for (const auto& root : roots) {
    if (!witnesses.count(root)) r.missing.push_back(root);
  }
  for (const auto& m : tube_bottom(p)) r.bottom_rigid = r.bottom_rigid && is_rigid(p, m);

  r.pass = r.missing.empty() && r.extra.empty() && r.ambiguous.empty() &&
           r.thin_imaginary.empty() && r.not_tau_locally_free.empty() && r.bottom_rigid;
  return r;
}

Json gls_report_to_json(const Presentation& p, const GLSReport& r) {
  Json j;
  j["n"] = r.n;
  j["orientation"] = r.orientation;
  j["bound"] = r.bound;
  j["pass"] = r.pass;
  const CartanData cd = cartan(r.n);
  Json real = Json::array();
  for (const auto& [root, w] : r.real) {
    real.push_back({{"root", root},
                    {"q", quadratic_form(cd, root)},
                    {"family", to_string(w.family)},
                    {"witness", format_module(p, w.module)}});
  }
  j["real"] = real;
  Json imag = Json::array();
  for (const auto& [root, ws] : r.imaginary) {
    std::map<std::string, int> counts;
    for (const auto& w : ws) ++counts[to_string(w.family)];
    imag.push_back({{"root", root}, {"witness_counts", counts}});
  }
  j["imaginary"] = imag;
  j["missing"] = r.missing;
  j["extra"] = r.extra;
  j["ambiguous"] = r.ambiguous;
  j["thin_imaginary"] = r.thin_imaginary;
  j["not_tau_locally_free"] = r.not_tau_locally_free;
  j["bottom_rigid"] = r.bottom_rigid;
  return j;
}

std::string gls_report_table(const Presentation& p, const GLSReport& r) {
  const CartanData cd = cartan(r.n);
  std::ostringstream out;
  out << "n=" << r.n << " orientation=" << r.orientation << " bound=" << r.bound << "\n";
  out << "root | q | family | witness\n";
  std::map<RootVector, std::vector<Witness>> rows;
  for (const auto& [root, w] : r.real) rows[root].push_back(w);
  for (const auto& [root, ws] : r.imaginary) rows[root] = ws;
  for (const auto& [root, ws] : rows) {
    for (const auto& w : ws) {
      out << vec_text(root) << " | " << quadratic_form(cd, root) << " | " << to_string(w.family)
          << " | " << format_module(p, w.module) << "\n";
    }
  }
  auto list = [&](const char* name, const std::vector<RootVector>& v) {
    if (v.empty()) return;
    out << name << ":";
    for (const auto& x : v) out << " " << vec_text(x);
    out << "\n";
  };
  list("missing", r.missing);
  list("extra", r.extra);
  list("ambiguous", r.ambiguous);
  list("thin imaginary", r.thin_imaginary);
  for (const auto& m : r.not_tau_locally_free) out << "not tau-locally free: " << m << "\n";
  if (!r.bottom_rigid) out << "tube bottom not rigid\n";
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

CheckReport check_coxeter_compatibility(const Presentation& p, const AdmissibleSeq& seq, int depth) {
  require_type_c(p);
  CheckReport rep;
  if (!is_admissible(p.type_c_orientation(), seq)) {
    throw DomainError("sequence is not admissible for the orientation");
  }
  const CartanData cd = cartan(p.n());
  std::set<RootVector> seen;
  size_t values = 0;
  auto check = [&](ModuleRef x, RootVector expect, int direction, const std::string& name) {
    for (int r = 0; r <= depth; ++r) {
      if (x.is_zero()) {
        rep.fail(name + " reaches zero at step " + std::to_string(r));
        return;
      }
      RootVector got = rank_vector(p, x);
      if (got != expect) {
        rep.fail(name + " step " + std::to_string(r) + ": rank " + vec_text(got) + " vs " +
                 vec_text(expect));
      }
      if (!is_nonnegative(expect) || quadratic_form(cd, expect) <= 0) {
        rep.fail(name + " step " + std::to_string(r) + ": " + vec_text(expect) +
                 " is not a positive real root");
      }
      seen.insert(got);
      ++values;
      x = tau_power(p, x, direction);
      expect = tau_coxeter(cd, seq, expect, direction);
    }
  };
  for (int k = 1; k <= p.n(); ++k) {
    const int v = seq.order[static_cast<size_t>(k - 1)];
    check(ModuleRef::string(p, projective_string(p, v)), beta(cd, seq, k), -1,
          "P" + std::to_string(v));
    check(ModuleRef::string(p, injective_string(p, v)), gamma(cd, seq, k), 1,
          "I" + std::to_string(v));
  }
  if (seen.size() != values) rep.fail("rank vectors along the orbits are not pairwise distinct");

  const RootVector d = delta(p.n());
  for (const auto& b : enumerate_bands(p, 1)) {
    ModuleRef m = ModuleRef::band(p, b);
    if (tau(p, m) != m || rank_vector(p, m) != d || tau_coxeter(cd, seq, d, 1) != d) {
      rep.fail("band " + format_module(p, m) + " is not tau- and Coxeter-fixed");
    }
  }
  return rep;
}

CheckReport check_tube_invariants(const Presentation& p) {
  require_type_c(p);
  CheckReport rep;
  const int n = p.n();
  const auto bottom = tube_bottom(p);
  if (static_cast<int>(bottom.size()) != n - 1) rep.fail("bottom orbit size");
  DimVector dims(static_cast<size_t>(n), 0);
  RootVector ranks(static_cast<size_t>(n), 0);
  for (const auto& m : bottom) {
    const DimVector dm = dim_vector(p, m);
    for (int i = 0; i < n; ++i) dims[static_cast<size_t>(i)] += dm[static_cast<size_t>(i)];
    if (!is_locally_free(p, m)) {
      rep.fail(format_module(p, m) + " is not locally free");
      continue;
    }
    const RootVector rm = rank_vector(p, m);
    for (int i = 0; i < n; ++i) ranks[static_cast<size_t>(i)] += rm[static_cast<size_t>(i)];
    ModuleRef x = m;
    int period = 0;
    do {
      x = tau(p, x);
      ++period;
    } while (!x.is_zero() && x != m && period <= n);
    if (period != n - 1) rep.fail(format_module(p, m) + " has tau-period " + std::to_string(period));
    if (!is_rigid(p, m)) rep.fail(format_module(p, m) + " is not rigid");
  }
  if (dims != DimVector(static_cast<size_t>(n), 2)) rep.fail("bottom dimension vectors do not sum to (2,...,2)");
  if (ranks != delta(n)) rep.fail("bottom rank vectors do not sum to delta");
  return rep;
}

Json check_report_to_json(const CheckReport& r) {
  return Json{{"pass", r.pass}, {"failures", r.failures}};
}

}  // namespace strandbox
