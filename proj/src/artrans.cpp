#include "strandbox/artrans.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "strandbox/errors.hpp"

namespace strandbox {

namespace {

constexpr int kGrowthLimit = 100000;

ModuleRef module_of(const Presentation& p, const StringWord& w) { return ModuleRef::string(p, w); }

StringWord single(Letter c) { return StringWord({c}); }

// Tries every letter of one direction; at most one can fit in a string algebra.
std::optional<Letter> unique_fit(const Presentation& p, bool inverse,
                                 const std::function<bool(Letter)>& fits) {
  std::optional<Letter> found;
  for (int a = 0; a < p.arrow_count(); ++a) {
    Letter c{a, inverse};
    if (!fits(c)) continue;
    if (found) throw InternalError("two letters extend the same end of a string");
    found = c;
  }
  return found;
}

// Grows `seed` one letter at a time on one side by letters of one direction.
StringWord grow_one_way(const Presentation& p, StringWord seed, bool on_left, bool inverse) {
  for (int guard = 0;; ++guard) {
    if (guard > kGrowthLimit) throw Unsupported("path lengths are unbounded");
    std::optional<StringWord> next;
    unique_fit(p, inverse, [&](Letter c) {
      auto w = on_left ? concat(p, single(c), seed) : concat(p, seed, single(c));
      if (w) next = w;
      return w.has_value();
    });
    if (!next) return seed;
    seed = *next;
  }
}

bool same_word(const StringWord& a, const StringWord& b) {
  if (a.is_trivial() != b.is_trivial()) return false;
  if (a.is_trivial()) return a.vertex() == b.vertex();
  return a.letters() == b.letters();
}

std::optional<StringWord> join(const Presentation& p, const StringWord& a, const StringWord& b,
                               const StringWord& c) {
  auto ab = concat(p, a, b);
  if (!ab) return std::nullopt;
  return concat(p, *ab, c);
}

StringWord must(std::optional<StringWord> w, const char* what) {
  if (!w) throw InternalError(std::string("maximal extension does not compose: ") + what);
  return *w;
}

std::optional<StringWord> add_hook_right(const Presentation& p, const StringWord& w) {
  auto a = extension_letter(p, w, Extend::RDE);
  if (!a) return std::nullopt;
  return must(join(p, w, single(*a), side_extension(p, a->arrow, SideKind::AlphaMinus)), "w_h");
}

std::optional<StringWord> add_hook_left(const Presentation& p, const StringWord& w) {
  auto b = extension_letter(p, w, Extend::LIE);
  if (!b) return std::nullopt;
  return must(join(p, side_extension(p, b->arrow, SideKind::PlusInv), single(*b), w), "_h w");
}

std::optional<StringWord> add_cohook_right(const Presentation& p, const StringWord& w) {
  auto b = extension_letter(p, w, Extend::RIE);
  if (!b) return std::nullopt;
  return must(join(p, w, single(*b), side_extension(p, b->arrow, SideKind::InvPlus)), "w_c");
}

std::optional<StringWord> add_cohook_left(const Presentation& p, const StringWord& w) {
  auto a = extension_letter(p, w, Extend::LDE);
  if (!a) return std::nullopt;
  return must(join(p, side_extension(p, a->arrow, SideKind::MinusAlpha), single(*a), w), "_c w");
}

// w = u·c·ext(c) with c the last letter of the given direction.
std::optional<StringWord> delete_right(const Presentation& p, const StringWord& w, bool inverse,
                                       SideKind ext) {
  const auto& cs = w.letters();
  int k = w.length() - 1;
  while (k >= 0 && cs[static_cast<size_t>(k)].inverse != inverse) --k;
  if (k < 0) return std::nullopt;
  StringWord tail = side_extension(p, cs[static_cast<size_t>(k)].arrow, ext);
  const int tail_len = w.length() - 1 - k;
  if (tail.length() != tail_len) return std::nullopt;
  if (tail_len > 0 && !same_word(tail, take_back(w, tail_len))) return std::nullopt;
  return drop_back(p, w, tail_len + 1);
}

// w = ext(c)·c·u with c the first letter of the given direction.
std::optional<StringWord> delete_left(const Presentation& p, const StringWord& w, bool inverse,
                                      SideKind ext) {
  const auto& cs = w.letters();
  int k = 0;
  while (k < w.length() && cs[static_cast<size_t>(k)].inverse != inverse) ++k;
  if (k == w.length()) return std::nullopt;
  StringWord head = side_extension(p, cs[static_cast<size_t>(k)].arrow, ext);
  if (head.length() != k) return std::nullopt;
  if (k > 0 && !same_word(head, take_front(w, k))) return std::nullopt;
  return drop_front(p, w, k + 1);
}

using WordOp = std::function<std::optional<StringWord>(const StringWord&)>;

WordOp op(const Presentation& p, HookSide side, HookOp kind) {
  return [&p, side, kind](const StringWord& w) { return hook_cohook(p, w, side, kind); };
}

ARCase case_tag(bool hook_right, bool hook_left) {
  if (hook_right && hook_left) return ARCase::HookHook;
  if (hook_right) return ARCase::CohookHook;
  if (hook_left) return ARCase::HookCohook;
  return ARCase::CohookCohook;
}

std::optional<int> arrow_with(const Presentation& p, const ModuleRef& m, SideKind which) {
  for (int a = 0; a < p.arrow_count(); ++a) {
    if (module_of(p, side_extension(p, a, which)) == m) return a;
  }
  return std::nullopt;
}

// 0 -> M(-a) -> M(-a·a·a_-) -> M(a_-) -> 0
ARSequence indecomposable_middle(const Presentation& p, int a) {
  StringWord left = side_extension(p, a, SideKind::MinusAlpha);
  StringWord right = side_extension(p, a, SideKind::AlphaMinus);
  StringWord mid = must(join(p, left, single({a, false}), right), "-a·a·a_-");
  return {module_of(p, left), {module_of(p, mid)}, module_of(p, right), ARCase::IndecMiddle};
}

std::vector<ModuleRef> band_neighbours(const ModuleRef& m) {
  std::vector<ModuleRef> out;
  ModuleRef up = m;
  up.level = m.level + 1;
  out.push_back(up);
  if (m.level > 1) {
    ModuleRef down = m;
    down.level = m.level - 1;
    out.push_back(down);
  }
  return out;
}

void check_middles_agree(const ARSequence& a, const ARSequence& b) {
  auto x = a.middle;
  auto y = b.middle;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y || a.tag != b.tag) throw InternalError("AR sequence computed two ways disagrees");
}

std::optional<int> projective_vertex(const Presentation& p, const ModuleRef& m) {
  if (!m.is_string()) return std::nullopt;
  for (int i = 1; i <= p.n(); ++i) {
    if (projective_string(p, i) == *m.word) return i;
  }
  return std::nullopt;
}

std::optional<int> injective_vertex(const Presentation& p, const ModuleRef& m) {
  if (!m.is_string()) return std::nullopt;
  for (int i = 1; i <= p.n(); ++i) {
    if (injective_string(p, i) == *m.word) return i;
  }
  return std::nullopt;
}

int size_of(const Presentation& p, const ModuleRef& m) { return total_dim(dim_vector(p, m)); }

}  // namespace

StringWord side_extension(const Presentation& p, int arrow, SideKind which) {
  if (arrow < 0 || arrow >= p.arrow_count()) throw DomainError("arrow out of range");
  switch (which) {
    case SideKind::AlphaMinus:
      return drop_front(p, grow_one_way(p, single({arrow, false}), false, true), 1);
    case SideKind::MinusAlpha:
      return drop_back(p, grow_one_way(p, single({arrow, false}), true, true), 1);
    case SideKind::PlusInv:
      return drop_back(p, grow_one_way(p, single({arrow, true}), true, false), 1);
    case SideKind::InvPlus:
      return drop_front(p, grow_one_way(p, single({arrow, true}), false, false), 1);
  }
  throw InternalError("unknown side extension");
}

std::optional<Letter> extension_letter(const Presentation& p, const StringWord& w, Extend mode) {
  const bool on_left = mode == Extend::LDE || mode == Extend::LIE;
  const bool inverse = mode == Extend::RIE || mode == Extend::LIE;
  return unique_fit(p, inverse, [&](Letter c) {
    return (on_left ? concat(p, single(c), w) : concat(p, w, single(c))).has_value();
  });
}

bool extendable(const Presentation& p, const StringWord& w, Extend mode) {
  return extension_letter(p, w, mode).has_value();
}

std::optional<StringWord> hook_cohook(const Presentation& p, const StringWord& w, HookSide side,
                                      HookOp kind) {
  const bool right = side == HookSide::Right;
  switch (kind) {
    case HookOp::AddHook:
      return right ? add_hook_right(p, w) : add_hook_left(p, w);
    case HookOp::AddCohook:
      return right ? add_cohook_right(p, w) : add_cohook_left(p, w);
    case HookOp::DeleteHook:
      if (w.is_trivial()) return std::nullopt;
      return right ? delete_right(p, w, false, SideKind::AlphaMinus)
                   : delete_left(p, w, true, SideKind::PlusInv);
    case HookOp::DeleteCohook:
      if (w.is_trivial()) return std::nullopt;
      return right ? delete_right(p, w, true, SideKind::InvPlus)
                   : delete_left(p, w, false, SideKind::MinusAlpha);
  }
  throw InternalError("unknown hook operation");
}

std::string to_string(ARCase c) {
  switch (c) {
    case ARCase::IndecMiddle: return "IndecMiddle";
    case ARCase::HookHook: return "HookHook";
    case ARCase::CohookHook: return "CohookHook";
    case ARCase::HookCohook: return "HookCohook";
    case ARCase::CohookCohook: return "CohookCohook";
    case ARCase::BandSelf: return "BandSelf";
  }
  return "?";
}

std::optional<ARSequence> ar_sequence_starting_at(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) return std::nullopt;
  if (m.is_band()) return ARSequence{m, band_neighbours(m), m, ARCase::BandSelf};
  if (is_injective(p, m)) return std::nullopt;
  if (auto a = arrow_with(p, m, SideKind::MinusAlpha)) return indecomposable_middle(p, *a);

  const StringWord& w = m.string_word();
  const bool rde = extendable(p, w, Extend::RDE);
  const bool lie = extendable(p, w, Extend::LIE);
  WordOp on_right = op(p, HookSide::Right, rde ? HookOp::AddHook : HookOp::DeleteCohook);
  WordOp on_left = op(p, HookSide::Left, lie ? HookOp::AddHook : HookOp::DeleteCohook);
  auto a = on_right(w);
  auto b = on_left(w);
  if (!a || !b) {
    throw InternalError("no hook or cohook case applies to " + format_word(p, w));
  }
  auto end1 = on_left(*a);
  auto end2 = on_right(*b);
  if (!end1 || !end2 || module_of(p, *end1) != module_of(p, *end2)) {
    throw InternalError("left and right hook operations do not commute on " + format_word(p, w));
  }
  return ARSequence{m, {module_of(p, *a), module_of(p, *b)}, module_of(p, *end1),
                    case_tag(rde, lie)};
}

std::optional<ARSequence> ar_sequence_ending_at(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) return std::nullopt;
  if (m.is_band()) return ARSequence{m, band_neighbours(m), m, ARCase::BandSelf};
  if (is_projective(p, m)) return std::nullopt;
  if (auto a = arrow_with(p, m, SideKind::AlphaMinus)) return indecomposable_middle(p, *a);

  const StringWord& w = m.string_word();
  const bool rie = extendable(p, w, Extend::RIE);
  const bool lde = extendable(p, w, Extend::LDE);
  WordOp on_right = op(p, HookSide::Right, rie ? HookOp::AddCohook : HookOp::DeleteHook);
  WordOp on_left = op(p, HookSide::Left, lde ? HookOp::AddCohook : HookOp::DeleteHook);
  auto a = on_right(w);
  auto b = on_left(w);
  if (!a || !b) {
    throw InternalError("no hook or cohook case applies to " + format_word(p, w));
  }
  auto end1 = on_left(*a);
  auto end2 = on_right(*b);
  if (!end1 || !end2 || module_of(p, *end1) != module_of(p, *end2)) {
    throw InternalError("left and right hook operations do not commute on " + format_word(p, w));
  }
  // Tags are relative to the orientation of the starting end's canonical word.
  const ModuleRef start = module_of(p, *end1);
  const StringWord& v = start.string_word();
  return ARSequence{start, {module_of(p, *a), module_of(p, *b)}, m,
                    case_tag(extendable(p, v, Extend::RDE), extendable(p, v, Extend::LIE))};
}

ModuleRef tau(const Presentation& p, const ModuleRef& m) {
  if (m.is_band()) return m;
  auto seq = ar_sequence_ending_at(p, m);
  if (!seq) return ModuleRef::zero();
  auto back = ar_sequence_starting_at(p, seq->left);
  if (!back || back->right != m) {
    throw InternalError("tau and tau^-1 disagree at " + format_module(p, m));
  }
  check_middles_agree(*seq, *back);
  return seq->left;
}

ModuleRef tau_inv(const Presentation& p, const ModuleRef& m) {
  if (m.is_band()) return m;
  auto seq = ar_sequence_starting_at(p, m);
  if (!seq) return ModuleRef::zero();
  auto back = ar_sequence_ending_at(p, seq->right);
  if (!back || back->left != m) {
    throw InternalError("tau^-1 and tau disagree at " + format_module(p, m));
  }
  check_middles_agree(*seq, *back);
  return seq->right;
}

ModuleRef tau_power(const Presentation& p, const ModuleRef& m, int k) {
  ModuleRef x = m;
  for (int i = 0; i < std::abs(k) && !x.is_zero(); ++i) x = k > 0 ? tau(p, x) : tau_inv(p, x);
  return x;
}

bool index_is_admissible(Index i) {
  static const std::set<Index> ok = {{0, 1}, {1, 0}, {1, 1}, {0, 2},
                                     {2, 0}, {1, 2}, {2, 1}, {2, 2}};
  return ok.count(i) > 0;
}

std::vector<ModuleRef> irreducible_successors(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) return {};
  if (auto i = injective_vertex(p, m)) return soc_quotient_decomposition(p, *i);
  return ar_sequence_starting_at(p, m)->middle;
}

std::vector<ModuleRef> irreducible_predecessors(const Presentation& p, const ModuleRef& m) {
  if (m.is_zero()) return {};
  if (auto i = projective_vertex(p, m)) return rad_decomposition(p, *i);
  return ar_sequence_ending_at(p, m)->middle;
}

Index index(const Presentation& p, const ModuleRef& m) {
  if (!m.is_string()) throw DomainError("index is defined for string modules");
  auto distinct = [](std::vector<ModuleRef> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  };
  return {distinct(irreducible_predecessors(p, m)), distinct(irreducible_successors(p, m))};
}

Index index(const Presentation& p, const StringWord& w) { return index(p, module_of(p, w)); }

bool is_minimal(const Presentation& p, const StringWord& w) {
  const ModuleRef m = module_of(p, w);
  const int d = size_of(p, m);

  bool direct = true;
  for (const auto& x : irreducible_successors(p, m)) direct = direct && size_of(p, x) > d;
  for (const auto& x : irreducible_predecessors(p, m)) direct = direct && size_of(p, x) > d;

  bool by_type = false;
  const StringWord& c = m.string_word();
  if (c.is_trivial()) {
    // Nonzero maps out of a simple module are injective and into it surjective.
    by_type = true;
  } else {
    const bool am = arrow_with(p, m, SideKind::AlphaMinus).has_value();
    const bool ma = arrow_with(p, m, SideKind::MinusAlpha).has_value();
    const bool proj = is_projective(p, m);
    const bool inj = is_injective(p, m);
    auto ext = [&](Extend e) { return extendable(p, c, e); };
    const Index i = index(p, m);
    if (i == Index{1, 1}) {
      by_type = am && ma;
    } else if (i == Index{1, 2}) {
      by_type = !inj && am && !ma && ext(Extend::RDE) && ext(Extend::LIE);
    } else if (i == Index{2, 1}) {
      by_type = !proj && ma && !am && ext(Extend::RIE) && ext(Extend::LDE);
    } else if (i == Index{2, 2}) {
      by_type = !proj && !inj && !ma && !am && ext(Extend::RDE) && ext(Extend::RIE) &&
                ext(Extend::LDE) && ext(Extend::LIE);
    }
  }
  if (by_type != direct) {
    throw InternalError("minimality tests disagree on " + format_word(p, w));
  }
  return direct;
}

MinimalTable minimal_strings(const Presentation& p, int max_len) {
  if (!p.is_type_c()) throw DomainError("minimal string classification needs a type C presentation");
  MinimalTable out;
  auto add = [&](Index i, const ModuleRef& m) {
    auto& v = out[i];
    if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(m);
  };
  const Orientation& o = p.type_c_orientation();
  const int n = p.n();
  for (int v = 2; v < n; ++v) {
    if (o.is_sink(v)) add({0, 2}, module_of(p, StringWord::trivial(v)));
    if (o.is_source(v)) add({2, 0}, module_of(p, StringWord::trivial(v)));
  }
  for (int e = 1; e < n; ++e) {
    add({1, 1}, module_of(p, side_extension(p, p.spine_arrow(e), SideKind::AlphaMinus)));
  }
  for (int v : {1, n}) {
    const int loop = p.loop_at(v);
    add({1, 2}, module_of(p, side_extension(p, loop, SideKind::AlphaMinus)));
    add({2, 1}, module_of(p, side_extension(p, loop, SideKind::MinusAlpha)));
  }
  out[{2, 2}];
  for (const auto& w : enumerate_strings(p, max_len)) {
    if (w.is_trivial()) continue;
    const int s = word_source(p, w);
    const int t = word_target(p, w);
    if ((s != 1 && s != n) || (t != 1 && t != n)) continue;
    if (p.arrow(w.letters().front().arrow).is_loop()) continue;
    if (p.arrow(w.letters().back().arrow).is_loop()) continue;
    if (is_minimal(p, w) && index(p, w) == Index{2, 2}) add({2, 2}, module_of(p, w));
  }
  return out;
}

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::PI: return "PI";
    case ComponentKind::TubeRank: return "TubeRank";
    case ComponentKind::HomogeneousTube: return "HomogeneousTube";
    case ComponentKind::ZAInfInf: return "ZAInfInf";
  }
  return "?";
}

std::vector<ModuleRef> tube_bottom(const Presentation& p) {
  if (!p.is_type_c()) throw DomainError("the exceptional tube needs a type C presentation");
  std::vector<ModuleRef> out{module_of(p, side_extension(p, p.spine_arrow(1), SideKind::AlphaMinus))};
  for (int k = 1; k < p.n() - 1; ++k) out.push_back(tau_inv(p, out.back()));
  if (tau_inv(p, out.back()) != out.front()) throw InternalError("tube bottom is not a tau-orbit");
  return out;
}

std::vector<std::vector<ModuleRef>> tube_levels(const Presentation& p, int levels) {
  std::vector<std::vector<ModuleRef>> out{tube_bottom(p)};
  for (int l = 1; l < levels; ++l) {
    std::vector<ModuleRef> row;
    for (const auto& x : out.back()) {
      auto seq = ar_sequence_starting_at(p, x);
      if (!seq) throw InternalError("tube module without an AR sequence");
      auto up = std::max_element(seq->middle.begin(), seq->middle.end(),
                                 [&](const ModuleRef& a, const ModuleRef& b) {
                                   return size_of(p, a) < size_of(p, b);
                                 });
      row.push_back(*up);
    }
    out.push_back(row);
  }
  return out;
}

namespace {

struct GraphBuilder {
  const Presentation& p;
  ComponentGraph g;
  std::map<ModuleRef, int> ids;

  int id(const ModuleRef& m) {
    auto [it, fresh] = ids.emplace(m, static_cast<int>(g.nodes.size()));
    if (fresh) g.nodes.push_back(m);
    return it->second;
  }

  // Adds every edge among the collected nodes, then sorts for stable output.
  void close() {
    std::set<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> taus;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      const ModuleRef& m = g.nodes[i];
      for (const auto& y : irreducible_successors(p, m)) {
        auto it = ids.find(y);
        if (it != ids.end()) edges.insert({static_cast<int>(i), it->second});
      }
      ModuleRef t = tau(p, m);
      if (!t.is_zero()) {
        auto it = ids.find(t);
        if (it != ids.end()) taus.insert({static_cast<int>(i), it->second});
      }
    }
    g.edges.assign(edges.begin(), edges.end());
    g.tau_edges.assign(taus.begin(), taus.end());
  }
};

int tau_period(const Presentation& p, const ModuleRef& m, int limit) {
  ModuleRef x = m;
  for (int k = 1; k <= limit; ++k) {
    x = tau(p, x);
    if (x.is_zero()) return 0;
    if (x == m) return k;
  }
  return 0;
}

}  // namespace

ComponentGraph tube_rank(const Presentation& p, int levels) {
  GraphBuilder b{p, {}, {}};
  b.g.kind = ComponentKind::TubeRank;
  b.g.period = p.n() - 1;
  for (const auto& row : tube_levels(p, levels)) {
    for (const auto& m : row) b.id(m);
  }
  b.close();
  return b.g;
}

ComponentKind classify_component(const Presentation& p, const ModuleRef& seed) {
  if (seed.is_zero()) throw DomainError("the zero module has no component");
  if (seed.is_band()) return ComponentKind::HomogeneousTube;
  // Walk to smaller neighbours until a minimal module is reached.
  ModuleRef x = seed;
  for (;;) {
    std::optional<ModuleRef> smaller;
    const int d = size_of(p, x);
    for (const auto& y : irreducible_successors(p, x)) {
      if (size_of(p, y) < d) smaller = y;
    }
    for (const auto& y : irreducible_predecessors(p, x)) {
      if (size_of(p, y) < d) smaller = y;
    }
    if (!smaller) break;
    x = *smaller;
  }
  const Index i = index(p, x);
  if (i == Index{2, 2}) return ComponentKind::ZAInfInf;
  if (i == Index{1, 1}) {
    if (tau_period(p, x, p.n()) != p.n() - 1) throw InternalError("tube bottom has the wrong period");
    return ComponentKind::TubeRank;
  }
  return ComponentKind::PI;
}

ComponentGraph build_component(const Presentation& p, const ModuleRef& seed, int radius) {
  GraphBuilder b{p, {}, {}};
  b.g.kind = classify_component(p, seed);
  if (b.g.kind == ComponentKind::TubeRank) b.g.period = p.n() - 1;
  if (b.g.kind == ComponentKind::HomogeneousTube) b.g.period = 1;
  std::deque<std::pair<ModuleRef, int>> queue{{seed, 0}};
  b.id(seed);
  while (!queue.empty()) {
    auto [m, depth] = queue.front();
    queue.pop_front();
    if (depth >= radius) continue;
    std::vector<ModuleRef> next = irreducible_successors(p, m);
    for (const auto& y : irreducible_predecessors(p, m)) next.push_back(y);
    for (const auto& y : {tau(p, m), tau_inv(p, m)}) {
      if (!y.is_zero()) next.push_back(y);
    }
    for (const auto& y : next) {
      if (b.ids.count(y)) continue;
      b.id(y);
      queue.push_back({y, depth + 1});
    }
  }
  b.close();
  return b.g;
}

namespace {

std::string node_id(const Presentation& p, const ModuleRef& m) { return format_module(p, m); }

std::string vec_text(const std::vector<long long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string component_to_dot(const Presentation& p, const ComponentGraph& g) {
  std::ostringstream out;
  out << "digraph component {\n";
  out << "  // kind " << to_string(g.kind) << "\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const ModuleRef& m = g.nodes[i];
    DimVector d = dim_vector(p, m);
    std::string rank = is_locally_free(p, m) ? vec_text(rank_vector(p, m)) : "∅";
    out << "  n" << i << " [label=\"" << node_id(p, m) << " | "
        << vec_text(std::vector<long long>(d.begin(), d.end())) << " | " << rank << "\"];\n";
  }
  for (auto [a, b] : g.edges) out << "  n" << a << " -> n" << b << ";\n";
  for (auto [a, b] : g.tau_edges) {
    out << "  n" << a << " -> n" << b << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

Json component_to_json(const Presentation& p, const ComponentGraph& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  j["period"] = g.period;
  Json nodes = Json::array();
  for (const auto& m : g.nodes) {
    Json node = module_to_json(p, m);
    node["id"] = node_id(p, m);
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({node_id(p, g.nodes[a]), node_id(p, g.nodes[b])});
  j["edges"] = edges;
  Json taus = Json::array();
  for (auto [a, b] : g.tau_edges) taus.push_back({node_id(p, g.nodes[a]), node_id(p, g.nodes[b])});
  j["tau_edges"] = taus;
  return j;
}

}  // namespace strandbox
