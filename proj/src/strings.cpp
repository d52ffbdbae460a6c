#include "strandbox/strings.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "strandbox/errors.hpp"

namespace strandbox {

StringWord StringWord::trivial(int vertex, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("trivial string sign must be +1 or -1");
  StringWord w;
  w.vertex_ = vertex;
  w.sign_ = sign;
  return w;
}

StringWord::StringWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw DomainError("use StringWord::trivial for the empty word");
}

StringWord StringWord::inverse() const {
  if (is_trivial()) return trivial(vertex_, -sign_);
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return StringWord(std::move(out));
}

namespace {

void check_letter(const Presentation& p, Letter c) {
  if (c.arrow < 0 || c.arrow >= p.arrow_count()) {
    throw DomainError("letter refers to an arrow outside this presentation");
  }
}

// Relation factors ending at position `end` (inclusive) of the letters.
bool has_relation_ending_at(const Presentation& p, const std::vector<Letter>& cs, size_t end) {
  const size_t maxlen = static_cast<size_t>(p.max_relation_length());
  for (size_t len = 2; len <= maxlen && len <= end + 1; ++len) {
    const size_t start = end + 1 - len;
    const bool inv = cs[start].inverse;
    bool uniform = true;
    for (size_t k = start; k <= end; ++k) {
      if (cs[k].inverse != inv) {
        uniform = false;
        break;
      }
    }
    if (!uniform) continue;
    Path path;
    for (size_t k = start; k <= end; ++k) path.push_back(cs[k].arrow);
    if (inv) std::reverse(path.begin(), path.end());
    if (p.is_relation(path)) return true;
  }
  return false;
}

// Whether appending c to the right of the valid letters cs keeps a string.
bool can_append(const Presentation& p, std::vector<Letter>& cs, Letter c) {
  if (!cs.empty()) {
    const Letter last = cs.back();
    if (letter_source(p, last) != letter_target(p, c)) return false;
    if (c == last.inverted()) return false;
  }
  cs.push_back(c);
  bool ok = !has_relation_ending_at(p, cs, cs.size() - 1);
  cs.pop_back();
  return ok;
}

std::tuple<int, int, int, int> letter_key(const Presentation& p, Letter c) {
  const Arrow& a = p.arrow(c.arrow);
  return {a.is_loop() ? 0 : 1, a.source, c.arrow, c.inverse ? 1 : 0};
}

}  // namespace

int letter_source(const Presentation& p, Letter c) {
  check_letter(p, c);
  const Arrow& a = p.arrow(c.arrow);
  return c.inverse ? a.target : a.source;
}

int letter_target(const Presentation& p, Letter c) {
  check_letter(p, c);
  const Arrow& a = p.arrow(c.arrow);
  return c.inverse ? a.source : a.target;
}

int word_source(const Presentation& p, const StringWord& w) {
  return w.is_trivial() ? w.vertex() : letter_source(p, w.letters().back());
}

int word_target(const Presentation& p, const StringWord& w) {
  return w.is_trivial() ? w.vertex() : letter_target(p, w.letters().front());
}

int letter_source_slot(const Presentation& p, Letter c) {
  check_letter(p, c);
  return c.inverse ? p.target_side(c.arrow) : p.source_side(c.arrow);
}

int letter_target_slot(const Presentation& p, Letter c) {
  check_letter(p, c);
  return c.inverse ? p.source_side(c.arrow) : p.target_side(c.arrow);
}

int right_slot(const Presentation& p, const StringWord& w) {
  return w.is_trivial() ? w.sign() : letter_source_slot(p, w.letters().back());
}

int left_slot(const Presentation& p, const StringWord& w) {
  return w.is_trivial() ? -w.sign() : letter_target_slot(p, w.letters().front());
}

WalkView walk(const Presentation& p, const StringWord& w) {
  WalkView view;
  view.vertices.push_back(word_target(p, w));
  for (const Letter& c : w.letters()) {
    view.vertices.push_back(letter_source(p, c));
    view.steps.push_back({c.arrow, c.inverse});
  }
  return view;
}

bool is_string(const Presentation& p, const StringWord& w) {
  if (w.is_trivial()) return w.vertex() >= 1 && w.vertex() <= p.n();
  std::vector<Letter> acc;
  for (const Letter& c : w.letters()) {
    check_letter(p, c);
    if (!can_append(p, acc, c)) return false;
    acc.push_back(c);
  }
  return true;
}

bool is_band(const Presentation& p, const StringWord& w) {
  if (w.is_trivial()) return false;
  const int m = w.length();
  if (word_source(p, w) != word_target(p, w)) return false;
  const int need = std::max(2, (p.max_relation_length() + 1 + m - 1) / m + 1);
  if (!is_string(p, power(w, need))) return false;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    if (w == power(take_front(w, d), m / d)) return false;
  }
  return true;
}

bool letter_less(const Presentation& p, Letter a, Letter b) {
  return letter_key(p, a) < letter_key(p, b);
}

bool word_less(const Presentation& p, const StringWord& a, const StringWord& b) {
  if (a.is_trivial() || b.is_trivial()) {
    if (a.is_trivial() && b.is_trivial()) {
      return std::pair(a.vertex(), a.sign()) < std::pair(b.vertex(), b.sign());
    }
    return a.is_trivial();
  }
  return std::lexicographical_compare(
      a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
      [&](Letter x, Letter y) { return letter_less(p, x, y); });
}

bool word_shortlex_less(const Presentation& p, const StringWord& a, const StringWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return word_less(p, a, b);
}

StringWord canonical_string(const Presentation& p, const StringWord& w) {
  if (!is_string(p, w)) throw DomainError("not a string: " + format_word(p, w));
  if (w.is_trivial()) return StringWord::trivial(w.vertex(), 1);
  StringWord inv = w.inverse();
  return word_less(p, inv, w) ? inv : w;
}

StringWord rotate(const StringWord& w, int k) {
  if (w.is_trivial()) return w;
  const int m = w.length();
  k = ((k % m) + m) % m;
  std::vector<Letter> out(w.letters().begin() + k, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + k);
  return StringWord(std::move(out));
}

StringWord power(const StringWord& w, int k) {
  if (w.is_trivial() || k < 1) throw DomainError("power needs a nontrivial word and k >= 1");
  std::vector<Letter> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return StringWord(std::move(out));
}

StringWord canonical_band(const Presentation& p, const StringWord& w) {
  if (!is_band(p, w)) throw DomainError("not a band: " + format_word(p, w));
  StringWord best = w;
  for (const StringWord& base : {w, w.inverse()}) {
    for (int k = 0; k < w.length(); ++k) {
      StringWord r = rotate(base, k);
      if (word_less(p, r, best)) best = r;
    }
  }
  return best;
}

std::optional<StringWord> concat(const Presentation& p, const StringWord& u,
                                 const StringWord& v) {
  if (word_source(p, u) != word_target(p, v)) return std::nullopt;
  if (u.is_trivial() || v.is_trivial()) {
    if (right_slot(p, u) == left_slot(p, v)) return std::nullopt;
    return u.is_trivial() ? v : u;
  }
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  StringWord w(std::move(out));
  if (!is_string(p, w)) return std::nullopt;
  return w;
}

StringWord drop_front(const Presentation& p, const StringWord& w, int k) {
  if (k < 0 || k > w.length()) throw DomainError("drop_front out of range");
  if (k == 0) return w;
  if (k == w.length()) {
    return StringWord::trivial(word_source(p, w), letter_source_slot(p, w.letters().back()));
  }
  return StringWord(std::vector<Letter>(w.letters().begin() + k, w.letters().end()));
}

StringWord drop_back(const Presentation& p, const StringWord& w, int k) {
  if (k < 0 || k > w.length()) throw DomainError("drop_back out of range");
  if (k == 0) return w;
  if (k == w.length()) {
    return StringWord::trivial(word_target(p, w), -letter_target_slot(p, w.letters().front()));
  }
  return StringWord(std::vector<Letter>(w.letters().begin(), w.letters().end() - k));
}

StringWord take_front(const StringWord& w, int k) {
  if (k < 1 || k > w.length()) throw DomainError("take_front out of range");
  return StringWord(std::vector<Letter>(w.letters().begin(), w.letters().begin() + k));
}

StringWord take_back(const StringWord& w, int k) {
  if (k < 1 || k > w.length()) throw DomainError("take_back out of range");
  return StringWord(std::vector<Letter>(w.letters().end() - k, w.letters().end()));
}

std::vector<StringWord> enumerate_strings(const Presentation& p, int max_len) {
  if (max_len < 0) throw DomainError("max_len must be >= 0");
  std::vector<StringWord> out;
  for (int v = 1; v <= p.n(); ++v) out.push_back(StringWord::trivial(v));
  std::vector<Letter> all;
  for (int a = 0; a < p.arrow_count(); ++a) {
    all.push_back({a, false});
    all.push_back({a, true});
  }
  std::vector<Letter> cur;
  // Each class {w, w^-1} is reached twice; keep the canonical member only.
  auto dfs = [&](auto&& self) -> void {
    if (!cur.empty()) {
      StringWord w(cur);
      if (!word_less(p, w.inverse(), w)) out.push_back(std::move(w));
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (const Letter& c : all) {
      if (!can_append(p, cur, c)) continue;
      cur.push_back(c);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(),
            [&](const StringWord& a, const StringWord& b) { return word_shortlex_less(p, a, b); });
  return out;
}

StringWord spine_walk(const Presentation& p) {
  const Orientation& o = p.type_c_orientation();
  std::vector<Letter> out;
  for (int k = 1; k < p.n(); ++k) {
    const int e = p.n() - k;
    out.push_back({p.spine_arrow(e), !o.points_right(e)});
  }
  return StringWord(std::move(out));
}

std::vector<StringWord> enumerate_bands(const Presentation& p, int max_dl) {
  if (!p.is_type_c()) throw Unsupported("band enumeration needs a type C~ presentation");
  if (max_dl < 1) throw DomainError("max_dl must be >= 1");
  const StringWord w0 = spine_walk(p);
  const StringWord w0inv = w0.inverse();
  const int e1 = p.loop_at(1);
  const int en = p.loop_at(p.n());
  std::vector<StringWord> out;
  for (int t = 1; t <= max_dl; ++t) {
    std::set<std::vector<Letter>> seen;
    for (unsigned long mask = 0; mask < (1ul << (2 * t)); ++mask) {
      std::vector<Letter> cs;
      for (int b = 0; b < t; ++b) {
        cs.insert(cs.end(), w0inv.letters().begin(), w0inv.letters().end());
        cs.push_back({en, ((mask >> (2 * b)) & 1ul) != 0});
        cs.insert(cs.end(), w0.letters().begin(), w0.letters().end());
        cs.push_back({e1, ((mask >> (2 * b + 1)) & 1ul) != 0});
      }
      StringWord w(std::move(cs));
      if (!is_band(p, w)) continue;
      StringWord c = canonical_band(p, w);
      if (seen.insert(c.letters()).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const StringWord& a, const StringWord& b) { return word_shortlex_less(p, a, b); });
  return out;
}

int delta_length(const Presentation& p, const StringWord& band) {
  if (!p.is_type_c()) throw Unsupported("delta length needs a type C~ presentation");
  if (!is_band(p, band)) throw DomainError("not a band: " + format_word(p, band));
  const int e1 = p.loop_at(1);
  const int en = p.loop_at(p.n());
  int c1 = 0;
  int cn = 0;
  for (const Letter& c : band.letters()) {
    if (c.arrow == e1) ++c1;
    if (c.arrow == en) ++cn;
  }
  if (c1 != cn || c1 == 0 || band.length() != 2 * p.n() * c1) {
    throw InternalError("band is not of standard form: " + format_word(p, band));
  }
  return c1;
}

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw DomainError("");
    return v;
  } catch (const std::exception&) {
    throw DomainError("bad integer '" + s + "' in " + context);
  }
}

}  // namespace

StringWord parse_word(const Presentation& p, std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw DomainError("empty string text");
  if (t.rfind("triv(", 0) == 0) {
    if (t.back() != ')') throw DomainError("malformed trivial string '" + t + "'");
    const std::string inner = t.substr(5, t.size() - 6);
    const size_t comma = inner.find(',');
    const int v = parse_int(trim(inner.substr(0, comma)), t);
    const int sign = comma == std::string::npos ? 1 : parse_int(trim(inner.substr(comma + 1)), t);
    if (v < 1 || v > p.n()) throw DomainError("vertex out of range in '" + t + "'");
    return StringWord::trivial(v, sign);
  }
  std::vector<Letter> cs;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t dot = t.find('.', pos);
    if (dot == std::string::npos) dot = t.size();
    std::string tok = trim(std::string_view(t).substr(pos, dot - pos));
    bool inv = false;
    if (!tok.empty() && tok.back() == '~') {
      inv = true;
      tok.pop_back();
    }
    auto id = p.find_arrow(tok);
    if (!id) throw DomainError("unknown arrow '" + tok + "' in '" + t + "'");
    cs.push_back({*id, inv});
    pos = dot + 1;
  }
  StringWord w(std::move(cs));
  if (!is_string(p, w)) throw DomainError("'" + t + "' is not a string");
  return w;
}

std::string format_word(const Presentation& p, const StringWord& w) {
  if (w.is_trivial()) {
    if (w.sign() == 1) return "triv(" + std::to_string(w.vertex()) + ")";
    return "triv(" + std::to_string(w.vertex()) + ",-1)";
  }
  std::string out;
  for (const Letter& c : w.letters()) {
    if (!out.empty()) out.push_back('.');
    out += p.arrow(c.arrow).name;
    if (c.inverse) out.push_back('~');
  }
  return out;
}

}  // namespace strandbox
