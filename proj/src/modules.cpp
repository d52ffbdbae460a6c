#include "strandbox/modules.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "strandbox/errors.hpp"

namespace strandbox {

// ------------------------------------------------------------------ ModuleRef

ModuleRef ModuleRef::string(const Presentation& p, const StringWord& w) {
  ModuleRef m;
  m.kind = Kind::String;
  m.word = canonical_string(p, w);
  return m;
}

ModuleRef ModuleRef::band(const Presentation& p, const StringWord& b, int degree, int level,
                          std::vector<long long> param) {
  if (degree < 1 || level < 1) throw DomainError("band modules need degree >= 1 and level >= 1");
  if (!param.empty()) {
    if (static_cast<int>(param.size()) != degree) {
      throw DomainError("band parameter must list exactly `degree` coefficients");
    }
    if (param.front() == 0) throw DomainError("band parameter must have nonzero constant term");
  }
  ModuleRef m;
  m.kind = Kind::Band;
  m.word = canonical_band(p, b);
  m.degree = degree;
  m.level = level;
  m.param = std::move(param);
  return m;
}

const StringWord& ModuleRef::string_word() const {
  if (!word) throw DomainError("the zero module has no word");
  return *word;
}

// ------------------------------------------------------- dimension and ranks

namespace {

int band_multiplicity(const ModuleRef& m) { return m.degree * m.level; }

}  // namespace

DimVector dim_vector(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) throw DomainError("dimension vector of the zero module");
  DimVector d(static_cast<size_t>(p.n()), 0);
  const auto view = walk(p, m.string_word());
  if (m.is_string()) {
    for (int v : view.vertices) ++d[static_cast<size_t>(v - 1)];
    return d;
  }
  for (size_t k = 0; k + 1 < view.vertices.size(); ++k) {
    d[static_cast<size_t>(view.vertices[k] - 1)] += band_multiplicity(m);
  }
  return d;
}

int total_dim(const DimVector& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

bool is_locally_free(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) throw DomainError("local freeness of the zero module");
  const DimVector d = dim_vector(p, m);
  const int mult = m.is_band() ? band_multiplicity(m) : 1;
  for (int v = 1; v <= p.n(); ++v) {
    const int loop = p.loop_at(v);
    if (loop < 0) continue;
    int uses = 0;
    for (const Letter& c : m.string_word().letters()) uses += c.arrow == loop ? 1 : 0;
    // Each occurrence of the loop contributes a Jordan block of size two.
    if (2 * uses * mult != d[static_cast<size_t>(v - 1)]) return false;
  }
  return true;
}

RootVector rank_vector(const Presentation& p, const ModuleRef& m) {
  if (!is_locally_free(p, m)) throw NotLocallyFree(format_module(p, m) + " is not locally free");
  const DimVector d = dim_vector(p, m);
  RootVector r(d.begin(), d.end());
  for (int v = 1; v <= p.n(); ++v) {
    if (p.loop_at(v) >= 0) r[static_cast<size_t>(v - 1)] /= 2;
  }
  return r;
}

// ----------------------------------------------------------- band parameters

namespace {

using Poly = std::vector<std::uint64_t>;  // low to high

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const std::uint64_t lead_inv = powm(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::uint64_t coef = mulm(a.back(), lead_inv, p);
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulm(coef, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulm(a[i], b[j], p)) % p;
  }
  return poly_mod(out, f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f
Poly frobenius_power(const Poly& f, std::uint64_t p, int k) {
  Poly g{0, 1};
  for (int i = 0; i < k; ++i) g = poly_powmod(g, p, f, p);
  return g;
}

Poly sub_x(Poly g, std::uint64_t p) {
  if (g.size() < 2) g.resize(2, 0);
  g[1] = (g[1] + p - 1) % p;
  trim(g);
  return g;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<long long>& coeffs, std::uint64_t p) {
  const int s = static_cast<int>(coeffs.size());
  if (s < 1) return false;
  Poly f;
  for (long long c : coeffs) {
    long long r = c % static_cast<long long>(p);
    f.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r));
  }
  f.push_back(1);
  if (s == 1) return true;
  if (!sub_x(frobenius_power(f, p, s), p).empty()) return false;
  for (int q = 2; q <= s; ++q) {
    if (s % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
    if (!prime) continue;
    Poly g = poly_gcd(f, sub_x(frobenius_power(f, p, s / q), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<long long> default_band_param(int degree, const Field& field) {
  if (degree < 1) throw DomainError("band parameter degree must be >= 1");
  if (degree == 1) {
    return {field.kind == Field::Kind::Rational ? -1LL : static_cast<long long>(field.prime) - 1};
  }
  if (field.kind == Field::Kind::Rational) {
    std::vector<long long> c(static_cast<size_t>(degree), 0);
    c[0] = -2;  // T^s - 2 is Eisenstein at 2
    return c;
  }
  const auto p = static_cast<long long>(field.prime);
  std::vector<long long> c(static_cast<size_t>(degree), 0);
  // Odometer over coefficient vectors, constant term first.
  while (true) {
    if (c[0] != 0 && is_irreducible_mod_p(c, field.prime)) return c;
    size_t k = 0;
    while (k < c.size() && ++c[k] == p) c[k++] = 0;
    if (k == c.size()) break;
  }
  throw InternalError("no irreducible polynomial found");
}

// ------------------------------------------------------------ representations

namespace {

Matrix band_automorphism(const ModuleRef& m, const Field& field) {
  const int s = m.degree;
  const int l = m.level;
  const auto coeffs = m.param.empty() ? default_band_param(s, field) : m.param;
  Matrix phi(s * l, s * l);
  for (int b = 0; b < l; ++b) {
    const int off = b * s;
    for (int i = 0; i + 1 < s; ++i) phi.at(off + i + 1, off + i) = 1;
    for (int i = 0; i < s; ++i) phi.at(off + i, off + s - 1) = mpq_class(std::to_string(-coeffs[static_cast<size_t>(i)]));
    if (b + 1 < l) {
      for (int i = 0; i < s; ++i) phi.at(off + i, off + s + i) = 1;
    }
  }
  return phi;
}

}  // namespace

Representation build_representation(const Presentation& p, const ModuleRef& m,
                                    const Field& field) {
  if (m.is_zero()) throw DomainError("representation of the zero module");
  Representation r;
  r.dims = dim_vector(p, m);
  for (const auto& a : p.arrows()) {
    r.maps.emplace_back(r.dims[static_cast<size_t>(a.target - 1)],
                        r.dims[static_cast<size_t>(a.source - 1)]);
  }
  const auto view = walk(p, m.string_word());
  const bool band = m.is_band();
  const int block = band ? band_multiplicity(m) : 1;
  const size_t points = band ? view.vertices.size() - 1 : view.vertices.size();
  // offset of walk point k inside its vertex space
  std::vector<int> offset(points);
  std::vector<int> fill(static_cast<size_t>(p.n()), 0);
  for (size_t k = 0; k < points; ++k) {
    int& f = fill[static_cast<size_t>(view.vertices[k] - 1)];
    offset[k] = f;
    f += block;
  }
  Matrix phi;
  Matrix phi_inv;
  if (band) {
    phi = band_automorphism(m, field);
    phi_inv = inverse(phi);
  }
  for (size_t k = 0; k < view.steps.size(); ++k) {
    const auto& step = view.steps[k];
    const size_t here = k;
    const size_t next = band ? (k + 1) % points : k + 1;
    // The arrow maps the block at `from` to the block at `to`.
    const size_t from = step.inverse ? here : next;
    const size_t to = step.inverse ? next : here;
    Matrix& target = r.maps[static_cast<size_t>(step.arrow)];
    const Matrix* u = nullptr;
    if (band && k == 0) u = step.inverse ? &phi_inv : &phi;
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j < block; ++j) {
        mpq_class v = u ? u->at(i, j) : mpq_class(i == j ? 1 : 0);
        if (v != 0) target.at(offset[to] + i, offset[from] + j) = v;
      }
    }
  }
  return r;
}

bool satisfies_relations(const Presentation& p, const Representation& r) {
  for (const auto& rel : p.relations()) {
    Matrix prod = r.maps[static_cast<size_t>(rel.front())];
    for (size_t k = 1; k < rel.size(); ++k) prod = prod * r.maps[static_cast<size_t>(rel[k])];
    if (!prod.is_zero()) return false;
  }
  return true;
}

int hom_dim(const Presentation& p, const Representation& x, const Representation& y,
            const Field& field) {
  // Unknowns: entries of f_v, a dim y_v x dim x_v matrix for every vertex.
  std::vector<int> base(static_cast<size_t>(p.n()), 0);
  int unknowns = 0;
  for (int v = 0; v < p.n(); ++v) {
    base[static_cast<size_t>(v)] = unknowns;
    unknowns += y.dims[static_cast<size_t>(v)] * x.dims[static_cast<size_t>(v)];
  }
  if (unknowns == 0) return 0;
  auto var = [&](int v, int r, int c) {
    return base[static_cast<size_t>(v)] + r * x.dims[static_cast<size_t>(v)] + c;
  };
  int eqs = 0;
  for (const auto& a : p.arrows()) {
    eqs += y.dims[static_cast<size_t>(a.target - 1)] * x.dims[static_cast<size_t>(a.source - 1)];
  }
  Matrix sys(eqs, unknowns);
  int row = 0;
  for (int id = 0; id < p.arrow_count(); ++id) {
    const auto& a = p.arrow(id);
    const int s = a.source - 1;
    const int t = a.target - 1;
    const Matrix& px = x.maps[static_cast<size_t>(id)];
    const Matrix& py = y.maps[static_cast<size_t>(id)];
    // (f_t phi^x - phi^y f_s)[r][c] = 0
    for (int r = 0; r < y.dims[static_cast<size_t>(t)]; ++r) {
      for (int c = 0; c < x.dims[static_cast<size_t>(s)]; ++c) {
        for (int k = 0; k < x.dims[static_cast<size_t>(t)]; ++k) {
          if (px.at(k, c) != 0) sys.at(row, var(t, r, k)) += px.at(k, c);
        }
        for (int k = 0; k < y.dims[static_cast<size_t>(s)]; ++k) {
          if (py.at(r, k) != 0) sys.at(row, var(s, k, c)) -= py.at(r, k);
        }
        ++row;
      }
    }
  }
  return unknowns - rank(sys, field);
}

int hom_dim(const Presentation& p, const ModuleRef& x, const ModuleRef& y, const Field& field) {
  if (x.is_zero() || y.is_zero()) return 0;
  return hom_dim(p, build_representation(p, x, field), build_representation(p, y, field), field);
}

int ext1_dim_locally_free(const Presentation& p, const ModuleRef& x, const ModuleRef& y,
                          const Field& field) {
  const RootVector rx = rank_vector(p, x);
  const RootVector ry = rank_vector(p, y);
  const long long form = ringel_form(cartan(p.n()), p.type_c_orientation(), rx, ry);
  const long long ext = hom_dim(p, x, y, field) - form;
  if (ext < 0) {
    throw InternalError("negative Ext^1 between " + format_module(p, x) + " and " +
                        format_module(p, y));
  }
  return static_cast<int>(ext);
}

bool is_rigid(const Presentation& p, const ModuleRef& m, const Field& field) {
  return ext1_dim_locally_free(p, m, m, field) == 0;
}

// ------------------------------------------------------ projectives/injectives

namespace {

struct Peak {
  StringWord word;
  std::optional<StringWord> left;   // arm written left of the vertex
  std::optional<StringWord> right;  // arm written right of the vertex
};

// Grows 1_(i,+1) maximally on the left by letters of one direction and on
// the right by letters of the other: a peak for projectives (direct on the
// left) and a valley for injectives.
Peak grow(const Presentation& p, int i, bool projective) {
  if (i < 1 || i > p.n()) throw DomainError("vertex out of range");
  const bool left_inverse = !projective;
  const bool right_inverse = projective;
  constexpr int kLimit = 100000;
  Peak out{StringWord::trivial(i, 1), std::nullopt, std::nullopt};
  std::vector<Letter> left;
  std::vector<Letter> right;
  auto step = [&](bool on_left) {
    std::optional<StringWord> found;
    for (int a = 0; a < p.arrow_count(); ++a) {
      StringWord c({{a, on_left ? left_inverse : right_inverse}});
      auto next = on_left ? concat(p, c, out.word) : concat(p, out.word, c);
      if (!next) continue;
      if (found) throw InternalError("two maximal paths share a first arrow");
      found = next;
      (on_left ? left : right).push_back(c[0]);
    }
    if (found) out.word = *found;
    return found.has_value();
  };
  int guard = 0;
  while (step(true)) {
    if (++guard > kLimit) throw Unsupported("path lengths are unbounded");
  }
  while (step(false)) {
    if (++guard > kLimit) throw Unsupported("path lengths are unbounded");
  }
  if (!left.empty()) {
    std::reverse(left.begin(), left.end());
    out.left = StringWord(left);
  }
  if (!right.empty()) out.right = StringWord(right);
  return out;
}

std::vector<ModuleRef> arm_quotients(const Presentation& p, const Peak& peak) {
  std::vector<ModuleRef> out;
  if (peak.left) out.push_back(ModuleRef::string(p, drop_back(p, *peak.left, 1)));
  if (peak.right) out.push_back(ModuleRef::string(p, drop_front(p, *peak.right, 1)));
  return out;
}

}  // namespace

StringWord projective_string(const Presentation& p, int i) {
  return canonical_string(p, grow(p, i, true).word);
}

StringWord injective_string(const Presentation& p, int i) {
  return canonical_string(p, grow(p, i, false).word);
}

bool is_projective(const Presentation& p, const ModuleRef& m) {
  if (!m.is_string()) return false;
  for (int i = 1; i <= p.n(); ++i) {
    if (projective_string(p, i) == *m.word) return true;
  }
  return false;
}

bool is_injective(const Presentation& p, const ModuleRef& m) {
  if (!m.is_string()) return false;
  for (int i = 1; i <= p.n(); ++i) {
    if (injective_string(p, i) == *m.word) return true;
  }
  return false;
}

std::vector<ModuleRef> rad_decomposition(const Presentation& p, int i) {
  return arm_quotients(p, grow(p, i, true));
}

std::vector<ModuleRef> soc_quotient_decomposition(const Presentation& p, int i) {
  return arm_quotients(p, grow(p, i, false));
}

// ------------------------------------------------------------------ text/JSON

namespace {

std::string strip(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int to_int(const std::string& s, const std::string& ctx) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("bad integer '" + s + "' in " + ctx);
}

}  // namespace

ModuleRef parse_module(const Presentation& p, std::string_view text) {
  const std::string t = strip(text);
  if (t == "0" || t == "zero") return ModuleRef::zero();
  if (t.rfind("band(", 0) == 0) {
    if (t.back() != ')') throw DomainError("malformed band module '" + t + "'");
    std::vector<std::string> parts;
    std::string cur;
    for (char c : t.substr(5, t.size() - 6)) {
      if (c == ',') {
        parts.push_back(strip(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(strip(cur));
    if (parts.size() > 3) throw DomainError("band module takes at most 3 fields: '" + t + "'");
    const StringWord b = parse_word(p, parts[0]);
    if (!is_band(p, b)) throw DomainError("'" + parts[0] + "' is not a band");
    const int s = parts.size() > 1 ? to_int(parts[1], t) : 1;
    const int l = parts.size() > 2 ? to_int(parts[2], t) : 1;
    return ModuleRef::band(p, b, s, l);
  }
  return ModuleRef::string(p, parse_word(p, t));
}

std::string format_module(const Presentation& p, const ModuleRef& m) {
  switch (m.kind) {
    case ModuleRef::Kind::Zero:
      return "0";
    case ModuleRef::Kind::String:
      return format_word(p, *m.word);
    case ModuleRef::Kind::Band:
      return "band(" + format_word(p, *m.word) + "," + std::to_string(m.degree) + "," +
             std::to_string(m.level) + ")";
  }
  return "?";
}

Json module_to_json(const Presentation& p, const ModuleRef& m) {
  Json j;
  switch (m.kind) {
    case ModuleRef::Kind::Zero:
      j["kind"] = "zero";
      return j;
    case ModuleRef::Kind::String:
      j["kind"] = "string";
      j["word"] = format_word(p, *m.word);
      break;
    case ModuleRef::Kind::Band:
      j["kind"] = "band";
      j["word"] = format_word(p, *m.word);
      j["param_degree"] = m.degree;
      j["level"] = m.level;
      break;
  }
  j["dim"] = dim_vector(p, m);
  if (is_locally_free(p, m)) {
    j["rank"] = rank_vector(p, m);
  } else {
    j["rank"] = nullptr;
  }
  return j;
}

Json representation_to_json(const Representation& r) {
  Json j;
  j["dims"] = r.dims;
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back(m.to_strings());
  j["maps"] = maps;
  return j;
}

}  // namespace strandbox
