#include "strandbox/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "strandbox/errors.hpp"

namespace strandbox {

// ---------------------------------------------------------------- Orientation

Orientation::Orientation(std::vector<EdgeDir> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw DomainError("orientation needs at least one spine edge");
}

Orientation Orientation::parse(std::string_view spec) {
  std::vector<EdgeDir> edges;
  for (char c : spec) {
    if (c == 'R' || c == 'r') {
      edges.push_back(EdgeDir::Right);
    } else if (c == 'L' || c == 'l') {
      edges.push_back(EdgeDir::Left);
    } else {
      throw DomainError("orientation spec may only contain R and L, got '" +
                        std::string(spec) + "'");
    }
  }
  return Orientation(std::move(edges));
}

Orientation Orientation::linear(int n) {
  if (n < 2) throw DomainError("orientation needs n >= 2");
  return Orientation(std::vector<EdgeDir>(static_cast<size_t>(n - 1), EdgeDir::Right));
}

std::vector<Orientation> Orientation::all(int n) {
  if (n < 2) throw DomainError("orientation needs n >= 2");
  const int edges = n - 1;
  std::vector<Orientation> out;
  // Lexicographic in the spec string, where 'L' < 'R'.
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<EdgeDir> dirs;
    for (int e = 0; e < edges; ++e) {
      bool right = (mask >> (edges - 1 - e)) & 1u;
      dirs.push_back(right ? EdgeDir::Right : EdgeDir::Left);
    }
    out.emplace_back(std::move(dirs));
  }
  return out;
}

EdgeDir Orientation::edge(int i) const {
  if (i < 1 || i >= n()) throw DomainError("spine edge index out of range");
  return edges_[static_cast<size_t>(i - 1)];
}

bool Orientation::is_sink(int v) const {
  if (v < 1 || v > n()) throw DomainError("vertex out of range");
  if (v > 1 && !points_right(v - 1)) return false;
  if (v < n() && points_right(v)) return false;
  return true;
}

bool Orientation::is_source(int v) const {
  if (v < 1 || v > n()) throw DomainError("vertex out of range");
  if (v > 1 && points_right(v - 1)) return false;
  if (v < n() && !points_right(v)) return false;
  return true;
}

Orientation Orientation::reflected_at(int v) const {
  if (v < 1 || v > n()) throw DomainError("vertex out of range");
  auto edges = edges_;
  auto flip = [](EdgeDir d) { return d == EdgeDir::Right ? EdgeDir::Left : EdgeDir::Right; };
  if (v > 1) edges[static_cast<size_t>(v - 2)] = flip(edges[static_cast<size_t>(v - 2)]);
  if (v < n()) edges[static_cast<size_t>(v - 1)] = flip(edges[static_cast<size_t>(v - 1)]);
  return Orientation(std::move(edges));
}

std::set<std::pair<int, int>> Orientation::omega() const {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i < n(); ++i) {
    if (points_right(i)) {
      out.emplace(i + 1, i);
    } else {
      out.emplace(i, i + 1);
    }
  }
  return out;
}

std::string Orientation::to_string() const {
  std::string s;
  for (auto d : edges_) s.push_back(static_cast<char>(d));
  return s;
}

// --------------------------------------------------------------- Presentation

Presentation::Presentation(int n, std::vector<Arrow> arrows, std::vector<Path> relations,
                           std::optional<Orientation> orientation)
    : n_(n),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)),
      orientation_(std::move(orientation)) {
  if (n_ < 1) throw DomainError("presentation needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_) {
      throw DomainError("arrow " + a.name + " has an endpoint outside 1.." + std::to_string(n_));
    }
    if (a.name.empty() || !names.insert(a.name).second) {
      throw DomainError("arrow names must be nonempty and unique: '" + a.name + "'");
    }
  }
  for (const auto& r : relations_) {
    if (r.empty()) throw DomainError("empty relation");
    for (int id : r) {
      if (id < 0 || id >= arrow_count()) throw DomainError("relation references unknown arrow");
    }
    relation_set_.insert(r);
    max_relation_length_ = std::max(max_relation_length_, static_cast<int>(r.size()));
  }
  if (orientation_ && orientation_->n() != n_) {
    throw DomainError("orientation size does not match n");
  }
  assign_sides();
}

std::optional<int> Presentation::find_arrow(std::string_view name) const {
  for (int i = 0; i < arrow_count(); ++i) {
    if (arrows_[static_cast<size_t>(i)].name == name) return i;
  }
  return std::nullopt;
}

const Orientation& Presentation::type_c_orientation() const {
  if (!orientation_) throw Unsupported("presentation is not of type C~");
  return *orientation_;
}

int Presentation::loop_at(int v) const {
  for (int i = 0; i < arrow_count(); ++i) {
    const auto& a = arrows_[static_cast<size_t>(i)];
    if (a.is_loop() && a.source == v) return i;
  }
  return -1;
}

int Presentation::spine_arrow(int i) const {
  for (int id = 0; id < arrow_count(); ++id) {
    const auto& a = arrows_[static_cast<size_t>(id)];
    if (a.is_loop()) continue;
    if (std::min(a.source, a.target) == i && std::max(a.source, a.target) == i + 1) return id;
  }
  throw DomainError("no spine arrow on edge " + std::to_string(i));
}

int Presentation::source_side(int arrow) const {
  if (!has_sides_) throw Unsupported("presentation is not a string algebra");
  return source_side_.at(static_cast<size_t>(arrow));
}

int Presentation::target_side(int arrow) const {
  if (!has_sides_) throw Unsupported("presentation is not a string algebra");
  return target_side_.at(static_cast<size_t>(arrow));
}

bool Presentation::is_relation(const Path& path) const { return relation_set_.count(path) > 0; }

bool Presentation::operator==(const Presentation& other) const {
  if (n_ != other.n_ || relations_ != other.relations_ || orientation_ != other.orientation_) {
    return false;
  }
  if (arrows_.size() != other.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    const auto& b = other.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

void Presentation::assign_sides() {
  // Nodes are arrow ends: 2*id is the source end, 2*id+1 the target end.
  const int nodes = 2 * arrow_count();
  // Edge weight 0 = same side, 1 = opposite sides.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nodes));
  auto link = [&](int a, int b, int w) {
    adj[static_cast<size_t>(a)].emplace_back(b, w);
    adj[static_cast<size_t>(b)].emplace_back(a, w);
  };
  for (int a = 0; a < arrow_count(); ++a) {
    for (int b = a + 1; b < arrow_count(); ++b) {
      if (arrow(a).source == arrow(b).source) link(2 * a, 2 * b, 1);
      if (arrow(a).target == arrow(b).target) link(2 * a + 1, 2 * b + 1, 1);
    }
  }
  for (int in = 0; in < arrow_count(); ++in) {
    for (int out = 0; out < arrow_count(); ++out) {
      if (arrow(out).source != arrow(in).target) continue;
      link(2 * in + 1, 2 * out, is_relation({out, in}) ? 0 : 1);
    }
  }
  std::vector<int> side(static_cast<size_t>(nodes), 0);
  for (int start = 0; start < nodes; ++start) {
    if (side[static_cast<size_t>(start)] != 0) continue;
    side[static_cast<size_t>(start)] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, w] : adj[static_cast<size_t>(u)]) {
        int want = w ? -side[static_cast<size_t>(u)] : side[static_cast<size_t>(u)];
        if (side[static_cast<size_t>(v)] == 0) {
          side[static_cast<size_t>(v)] = want;
          queue.push_back(v);
        } else if (side[static_cast<size_t>(v)] != want) {
          has_sides_ = false;
          return;
        }
      }
    }
  }
  source_side_.resize(static_cast<size_t>(arrow_count()));
  target_side_.resize(static_cast<size_t>(arrow_count()));
  for (int a = 0; a < arrow_count(); ++a) {
    source_side_[static_cast<size_t>(a)] = side[static_cast<size_t>(2 * a)];
    target_side_[static_cast<size_t>(a)] = side[static_cast<size_t>(2 * a + 1)];
  }
  has_sides_ = true;
}

// ------------------------------------------------------------ type C~ family

std::string spine_arrow_name(int target, int source) {
  if (target < 10 && source < 10) return "a" + std::to_string(target) + std::to_string(source);
  return "a" + std::to_string(target) + "_" + std::to_string(source);
}

Presentation build_type_C_algebra(int n, const Orientation& orientation) {
  if (n < 3) throw DomainError("type C~_{n-1} needs n >= 3, got " + std::to_string(n));
  if (orientation.n() != n) {
    throw DomainError("orientation has " + std::to_string(orientation.n() - 1) +
                      " edges, expected " + std::to_string(n - 1));
  }
  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) {
    if (orientation.points_right(i)) {
      arrows.push_back({spine_arrow_name(i + 1, i), i, i + 1});
    } else {
      arrows.push_back({spine_arrow_name(i, i + 1), i + 1, i});
    }
  }
  const int e1 = static_cast<int>(arrows.size());
  arrows.push_back({"e1", 1, 1});
  const int en = static_cast<int>(arrows.size());
  arrows.push_back({"e" + std::to_string(n), n, n});
  std::vector<Path> relations{{e1, e1}, {en, en}};
  return Presentation(n, std::move(arrows), std::move(relations), orientation);
}

ValidationReport validate_string_algebra(const Presentation& p) {
  ValidationReport report;
  for (int v = 1; v <= p.n(); ++v) {
    int in = 0;
    int out = 0;
    for (const auto& a : p.arrows()) {
      if (a.target == v) ++in;
      if (a.source == v) ++out;
    }
    if (in > 2 || out > 2) {
      report.violations.push_back({1,
                                   "vertex " + std::to_string(v) + " has " + std::to_string(in) +
                                       " incoming and " + std::to_string(out) + " outgoing arrows",
                                   v, std::nullopt});
    }
  }
  for (int a = 0; a < p.arrow_count(); ++a) {
    int after = 0;
    int before = 0;
    for (int b = 0; b < p.arrow_count(); ++b) {
      if (p.arrow(b).source == p.arrow(a).target && !p.is_relation({b, a})) ++after;
      if (p.arrow(b).target == p.arrow(a).source && !p.is_relation({a, b})) ++before;
    }
    if (after > 1) {
      report.violations.push_back(
          {2, "arrow " + p.arrow(a).name + " has " + std::to_string(after) + " continuations outside I",
           std::nullopt, a});
    }
    if (before > 1) {
      report.violations.push_back(
          {2, "arrow " + p.arrow(a).name + " has " + std::to_string(before) + " predecessors outside I",
           std::nullopt, a});
    }
  }
  for (const auto& r : p.relations()) {
    bool composable = r.size() >= 2;
    for (size_t k = 0; k + 1 < r.size(); ++k) {
      if (p.arrow(r[k]).source != p.arrow(r[k + 1]).target) composable = false;
    }
    if (!composable) {
      report.violations.push_back(
          {3, "relation starting with " + p.arrow(r.front()).name + " is not a path of length >= 2",
           std::nullopt, r.front()});
    }
  }
  if (report.valid() && !p.has_sides()) {
    report.violations.push_back({0, "no consistent side assignment for arrow ends", std::nullopt,
                                 std::nullopt});
  }
  return report;
}

std::vector<std::pair<int, Admissibility>> admissible_vertices(const Presentation& p) {
  std::vector<std::pair<int, Admissibility>> out;
  for (int v = 1; v <= p.n(); ++v) {
    bool has_in = false;
    bool has_out = false;
    for (const auto& a : p.arrows()) {
      if (a.is_loop()) continue;
      if (a.target == v) has_in = true;
      if (a.source == v) has_out = true;
    }
    if (!has_out) out.emplace_back(v, Admissibility::Sink);
    if (!has_in) out.emplace_back(v, Admissibility::Source);
  }
  return out;
}

// ----------------------------------------------------------------------- JSON

Json to_json(const Presentation& p) {
  Json j;
  j["n"] = p.n();
  if (p.orientation()) {
    Json dirs = Json::array();
    for (char c : p.orientation()->to_string()) dirs.push_back(std::string(1, c));
    j["orientation"] = dirs;
  } else {
    j["orientation"] = nullptr;
  }
  Json arrows = Json::array();
  for (const auto& a : p.arrows()) {
    Json ja;
    ja["name"] = a.name;
    ja["source"] = a.source;
    ja["target"] = a.target;
    arrows.push_back(ja);
  }
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : p.relations()) {
    Json jr = Json::array();
    for (int id : r) jr.push_back(p.arrow(id).name);
    rels.push_back(jr);
  }
  j["relations"] = rels;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& ja : j.at("arrows")) {
      arrows.push_back({ja.at("name").get<std::string>(), ja.at("source").get<int>(),
                        ja.at("target").get<int>()});
    }
    auto id_of = [&](const std::string& name) {
      for (size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].name == name) return static_cast<int>(i);
      }
      throw DomainError("relation names unknown arrow " + name);
    };
    std::vector<Path> relations;
    for (const auto& jr : j.at("relations")) {
      Path path;
      for (const auto& name : jr) path.push_back(id_of(name.get<std::string>()));
      relations.push_back(std::move(path));
    }
    if (j.contains("orientation") && !j.at("orientation").is_null()) {
      std::string spec;
      for (const auto& d : j.at("orientation")) spec += d.get<std::string>();
      auto built = build_type_C_algebra(n, Orientation::parse(spec));
      Presentation described(n, std::move(arrows), std::move(relations), Orientation::parse(spec));
      if (!(built == described)) {
        throw DomainError("arrows/relations do not match the declared type C~ orientation");
      }
      return built;
    }
    return Presentation(n, std::move(arrows), std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed presentation JSON: ") + e.what());
  }
}

}  // namespace strandbox
