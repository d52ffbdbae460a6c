#pragma once

// String and band modules as explicit representations, with dimension and
// rank vectors, Hom dimensions, Ext^1 for locally free modules, and the
// string realizations of indecomposable projectives and injectives.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strandbox/linalg.hpp"
#include "strandbox/roots.hpp"
#include "strandbox/strings.hpp"

namespace strandbox {

/// An indecomposable module up to isomorphism, or zero.
///
/// Band modules are M(b, s, phi) at a level l of their homogeneous tube,
/// where phi is the companion matrix of a monic irreducible polynomial of
/// degree s. `param` lists its coefficients c_0 .. c_{s-1} below the leading
/// term; an empty list selects a default polynomial for the field.
struct ModuleRef {
  enum class Kind { Zero, String, Band };

  Kind kind = Kind::Zero;
  std::optional<StringWord> word;  // canonical string or canonical band
  int degree = 0;
  int level = 0;
  std::vector<long long> param;

  static ModuleRef zero() { return {}; }
  /// Canonicalizes w.
  static ModuleRef string(const Presentation& p, const StringWord& w);
  static ModuleRef band(const Presentation& p, const StringWord& b, int degree = 1, int level = 1,
                        std::vector<long long> param = {});

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_string() const { return kind == Kind::String; }
  bool is_band() const { return kind == Kind::Band; }
  const StringWord& string_word() const;

  auto operator<=>(const ModuleRef&) const = default;
};

using DimVector = std::vector<int>;

DimVector dim_vector(const Presentation& p, const ModuleRef& m);
int total_dim(const DimVector& d);
bool is_locally_free(const Presentation& p, const ModuleRef& m);
/// Halves the coordinates at loop vertices; throws NotLocallyFree.
RootVector rank_vector(const Presentation& p, const ModuleRef& m);

struct Representation {
  std::vector<int> dims;     // dims[v-1]
  std::vector<Matrix> maps;  // maps[arrow], rows = dim of the target
};

/// Monic polynomial coefficients c_0 .. c_{s-1} used when a band module does
/// not name its own parameter: T - 1 in degree one, T^s - 2 over Q and the
/// first irreducible polynomial with nonzero constant term over F_p.
std::vector<long long> default_band_param(int degree, const Field& field);
bool is_irreducible_mod_p(const std::vector<long long>& coeffs, std::uint64_t p);

Representation build_representation(const Presentation& p, const ModuleRef& m,
                                    const Field& field = Field::from_env());
/// The square of every relation path acts as zero.
bool satisfies_relations(const Presentation& p, const Representation& r);

int hom_dim(const Presentation& p, const Representation& x, const Representation& y,
            const Field& field = Field::from_env());
int hom_dim(const Presentation& p, const ModuleRef& x, const ModuleRef& y,
            const Field& field = Field::from_env());
/// dim Hom(X, Y) - <rank X, rank Y>; negative values raise InternalError.
int ext1_dim_locally_free(const Presentation& p, const ModuleRef& x, const ModuleRef& y,
                          const Field& field = Field::from_env());
bool is_rigid(const Presentation& p, const ModuleRef& m, const Field& field = Field::from_env());

StringWord projective_string(const Presentation& p, int i);
StringWord injective_string(const Presentation& p, int i);
bool is_projective(const Presentation& p, const ModuleRef& m);
bool is_injective(const Presentation& p, const ModuleRef& m);
/// Indecomposable summands of rad P_i and of I_i / soc I_i.
std::vector<ModuleRef> rad_decomposition(const Presentation& p, int i);
std::vector<ModuleRef> soc_quotient_decomposition(const Presentation& p, int i);

/// "0", a string such as "a32.a21" or "triv(2)", or "band(<word>[,s[,l]])".
ModuleRef parse_module(const Presentation& p, std::string_view text);
std::string format_module(const Presentation& p, const ModuleRef& m);
Json module_to_json(const Presentation& p, const ModuleRef& m);
Json representation_to_json(const Representation& r);

}  // namespace strandbox
