#pragma once

// Quiver presentations with monomial relations, and the type C~_{n-1} family
// H(C, D, Omega) whose spine is an A_n quiver with loops at both ends.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace strandbox {

using Json = nlohmann::ordered_json;

enum class EdgeDir : char { Right = 'R', Left = 'L' };

/// Direction of each spine edge {i, i+1}; Right means i -> i+1.
class Orientation {
 public:
  explicit Orientation(std::vector<EdgeDir> edges);

  /// Parses "RRLR"-style specs; throws DomainError on bad characters.
  static Orientation parse(std::string_view spec);
  static Orientation linear(int n);
  /// All 2^(n-1) orientations in lexicographic spec order.
  static std::vector<Orientation> all(int n);

  int n() const { return static_cast<int>(edges_.size()) + 1; }
  /// Direction of edge {i, i+1}, 1 <= i < n.
  EdgeDir edge(int i) const;
  bool points_right(int i) const { return edge(i) == EdgeDir::Right; }

  bool is_sink(int v) const;
  bool is_source(int v) const;
  bool is_admissible(int v) const { return is_sink(v) || is_source(v); }

  /// Reverses every edge incident to v.
  Orientation reflected_at(int v) const;

  /// The relation-set form: (j, i) is a member iff there is an arrow i -> j.
  std::set<std::pair<int, int>> omega() const;

  std::string to_string() const;

  auto operator<=>(const Orientation&) const = default;

 private:
  std::vector<EdgeDir> edges_;
};

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  bool is_loop() const { return source == target; }
};

/// A path of arrow ids written as a composition: the last entry is
/// traversed first, so consecutive entries p[k], p[k+1] satisfy
/// source(p[k]) == target(p[k+1]).
using Path = std::vector<int>;

/// Immutable quiver-with-relations. Vertices are 1..n.
///
/// On construction every arrow end is assigned a side (+1/-1) at its vertex
/// such that two letters can be juxtaposed in a string exactly when they
/// occupy opposite sides. This is what decides how trivial strings extend.
/// If no such assignment exists the presentation is not a string algebra and
/// the string calculus refuses to run on it.
class Presentation {
 public:
  Presentation(int n, std::vector<Arrow> arrows, std::vector<Path> relations,
               std::optional<Orientation> orientation = std::nullopt);

  int n() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(static_cast<size_t>(id)); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  std::optional<int> find_arrow(std::string_view name) const;
  const std::vector<Path>& relations() const { return relations_; }

  /// Set only for presentations built by build_type_C_algebra.
  const std::optional<Orientation>& orientation() const { return orientation_; }
  bool is_type_c() const { return orientation_.has_value(); }
  const Orientation& type_c_orientation() const;

  /// Loop at v, or -1.
  int loop_at(int v) const;
  /// Spine arrow on the edge {i, i+1} of a type C~ presentation.
  int spine_arrow(int i) const;

  bool has_sides() const { return has_sides_; }
  int source_side(int arrow) const;
  int target_side(int arrow) const;

  /// Whether the composable path is one of the generating relations.
  bool is_relation(const Path& path) const;
  int max_relation_length() const { return max_relation_length_; }

  bool operator==(const Presentation& other) const;

 private:
  void assign_sides();

  int n_;
  std::vector<Arrow> arrows_;
  std::vector<Path> relations_;
  std::optional<Orientation> orientation_;
  std::set<Path> relation_set_;
  int max_relation_length_ = 0;
  bool has_sides_ = false;
  std::vector<int> source_side_;
  std::vector<int> target_side_;
};

/// The string algebra of type C~_{n-1}: spine arrows named a<target><source>,
/// loops e1 and e<n>, relations e1^2 and e<n>^2.
Presentation build_type_C_algebra(int n, const Orientation& orientation);

/// Name of the spine arrow i -> j.
std::string spine_arrow_name(int target, int source);

struct Violation {
  int condition = 0;  // 1, 2 or 3 of the string algebra definition; 0 = sides
  std::string message;
  std::optional<int> vertex;
  std::optional<int> arrow;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_string_algebra(const Presentation& p);

enum class Admissibility { Sink, Source };

/// Sinks and sources of the loop-free quiver Q^0, sorted by vertex.
std::vector<std::pair<int, Admissibility>> admissible_vertices(const Presentation& p);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

}  // namespace strandbox
