#pragma once

// Auslander-Reiten translation for string algebras via hooks and cohooks,
// plus indices, minimal string modules, the exceptional tube and bounded
// windows of AR components.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandbox/modules.hpp"

namespace strandbox {

/// The four maximal one-directional extensions attached to an arrow a:
/// a_- (inverse, after a), -a (inverse, before a), +(a^-1) (direct, before
/// a^-1) and (a^-1)_+ (direct, after a^-1).
enum class SideKind { AlphaMinus, MinusAlpha, PlusInv, InvPlus };

StringWord side_extension(const Presentation& p, int arrow, SideKind which);

/// RDE: w·a, RIE: w·b^-1, LDE: a·w, LIE: b^-1·w.
enum class Extend { RDE, RIE, LDE, LIE };

std::optional<Letter> extension_letter(const Presentation& p, const StringWord& w, Extend mode);
bool extendable(const Presentation& p, const StringWord& w, Extend mode);

enum class HookSide { Left, Right };
enum class HookOp { AddHook, AddCohook, DeleteHook, DeleteCohook };

/// w_h, _h w, w_c, _c w, or the string left after removing a hook or cohook.
/// nullopt when the extension or decomposition does not exist.
std::optional<StringWord> hook_cohook(const Presentation& p, const StringWord& w, HookSide side,
                                      HookOp op);

enum class ARCase { IndecMiddle, HookHook, CohookHook, HookCohook, CohookCohook, BandSelf };

std::string to_string(ARCase c);

struct ARSequence {
  ModuleRef left;
  std::vector<ModuleRef> middle;
  ModuleRef right;
  ARCase tag = ARCase::IndecMiddle;
};

/// nullopt iff m is injective (or zero).
std::optional<ARSequence> ar_sequence_starting_at(const Presentation& p, const ModuleRef& m);
/// nullopt iff m is projective (or zero).
std::optional<ARSequence> ar_sequence_ending_at(const Presentation& p, const ModuleRef& m);

/// Both directions are computed independently and checked against each
/// other; a disagreement raises InternalError.
ModuleRef tau(const Presentation& p, const ModuleRef& m);
ModuleRef tau_inv(const Presentation& p, const ModuleRef& m);
/// tau^k for k >= 0, tau_inv^{-k} for k < 0. Stops at zero.
ModuleRef tau_power(const Presentation& p, const ModuleRef& m, int k);

struct Index {
  int left = 0;
  int right = 0;
  auto operator<=>(const Index&) const = default;
};

bool index_is_admissible(Index i);

Index index(const Presentation& p, const ModuleRef& m);
Index index(const Presentation& p, const StringWord& w);

/// Irreducible maps out of / into m, from the AR sequences or the radical
/// and socle data of projectives and injectives.
std::vector<ModuleRef> irreducible_successors(const Presentation& p, const ModuleRef& m);
std::vector<ModuleRef> irreducible_predecessors(const Presentation& p, const ModuleRef& m);

/// Every outgoing irreducible map is injective and every incoming one is
/// surjective. Evaluated from the extendability characterization and checked
/// against the dimensions of the neighbours.
bool is_minimal(const Presentation& p, const StringWord& w);

using MinimalTable = std::map<Index, std::vector<ModuleRef>>;

/// Minimal string modules by type. Type (2,2) is searched among strings of
/// length up to max_len.
MinimalTable minimal_strings(const Presentation& p, int max_len = 12);

enum class ComponentKind { PI, TubeRank, HomogeneousTube, ZAInfInf };

std::string to_string(ComponentKind k);

struct ComponentGraph {
  ComponentKind kind = ComponentKind::PI;
  int period = 0;  // tau-period for tubes, 0 otherwise
  std::vector<ModuleRef> nodes;
  std::vector<std::pair<int, int>> edges;      // irreducible maps, by node index
  std::vector<std::pair<int, int>> tau_edges;  // (X, tau X)
};

/// The bottom tau-orbit of the exceptional tube: element k+1 is tau^-1 of
/// element k, starting from M(a_-) for the spine arrow at vertex 1.
std::vector<ModuleRef> tube_bottom(const Presentation& p);
/// levels[l-1][k] is the module of quasi-length l whose quasi-socle is
/// bottom[k].
std::vector<std::vector<ModuleRef>> tube_levels(const Presentation& p, int levels);
ComponentGraph tube_rank(const Presentation& p, int levels = 2);

ComponentKind classify_component(const Presentation& p, const ModuleRef& seed);
/// Breadth-first window of the component of seed; radius counts irreducible
/// maps and tau steps.
ComponentGraph build_component(const Presentation& p, const ModuleRef& seed, int radius);

std::string component_to_dot(const Presentation& p, const ComponentGraph& g);
Json component_to_json(const Presentation& p, const ComponentGraph& g);

}  // namespace strandbox
