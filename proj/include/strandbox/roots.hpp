#pragma once

// Root datum of affine type C~_{n-1} with the minimal symmetrizer:
// reflections, bilinear forms, positive roots, admissible sequences and
// Coxeter transformations.

#include <set>
#include <vector>

#include "strandbox/algebra.hpp"

namespace strandbox {

using RootVector = std::vector<long long>;

struct CartanData {
  int n = 0;
  std::vector<std::vector<int>> C;  // C[i-1][j-1] = c_ij
  std::vector<int> D;               // D[i-1] = d_i

  int c(int i, int j) const { return C[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
  int d(int i) const { return D[static_cast<size_t>(i - 1)]; }
};

CartanData cartan(int n);

RootVector simple_root(int n, int i);
RootVector delta(int n);
long long height(const RootVector& x);
bool is_nonnegative(const RootVector& x);

/// s_i(x) = x - (Cx)_i alpha_i.
RootVector reflect(const CartanData& cd, int i, const RootVector& x);

/// x^T (DC) y.
long long sym_form(const CartanData& cd, const RootVector& x, const RootVector& y);
/// sym_form(x, x) / 2.
long long quadratic_form(const CartanData& cd, const RootVector& x);
/// <x, y> = sum_i d_i x_i y_i + sum over spine arrows i -> j of d_i c_ij x_i y_j.
/// For locally free modules, <rank X, rank Y> = dim Hom(X, Y) - dim Ext^1(X, Y).
long long ringel_form(const CartanData& cd, const Orientation& o, const RootVector& x,
                      const RootVector& y);

/// Positive roots of height <= bound: the reflection closure of the simple
/// roots together with the positive multiples of delta.
std::set<RootVector> enumerate_positive_roots(const CartanData& cd, long long bound);

enum class Polarity { Plus, Minus };

struct AdmissibleSeq {
  std::vector<int> order;
  Polarity polarity = Polarity::Plus;

  bool operator==(const AdmissibleSeq&) const = default;
};

std::vector<AdmissibleSeq> admissible_sequences(const Orientation& o, Polarity polarity);
bool is_admissible(const Orientation& o, const AdmissibleSeq& seq);
AdmissibleSeq reversed(const AdmissibleSeq& seq);
/// (i_2, ..., i_n, i_1).
AdmissibleSeq rotated(const AdmissibleSeq& seq);

/// c^k(x) for c = s_{i_n} ... s_{i_1}; negative k applies the inverse.
RootVector coxeter(const CartanData& cd, const AdmissibleSeq& seq, const RootVector& x, int k = 1);
/// The power of the Coxeter transformation matching tau on rank vectors:
/// c^k for plus sequences and c^{-k} for minus sequences.
RootVector tau_coxeter(const CartanData& cd, const AdmissibleSeq& seq, const RootVector& x, int k);

/// beta_{seq,k} and gamma_{seq,k}, 1 <= k <= n, with the polarity-dependent
/// definitions.
RootVector beta(const CartanData& cd, const AdmissibleSeq& seq, int k);
RootVector gamma(const CartanData& cd, const AdmissibleSeq& seq, int k);

/// The simple (or alternating fallback) root seeding the regular family.
RootVector regular_seed_root(const Orientation& o);

struct ClosedFormRoots {
  std::set<RootVector> preprojective;  // c^{-r} beta_k
  std::set<RootVector> preinjective;   // c^s gamma_k
  std::set<RootVector> regular;        // sum_{p <= j <= p+q} c^j(alpha) + m delta
  std::set<RootVector> imaginary;      // m delta, m > 0

  std::set<RootVector> all() const;
};

/// Requires a plus-admissible sequence for o.
ClosedFormRoots closed_form_positive_roots(const CartanData& cd, const Orientation& o,
                                           const AdmissibleSeq& seq, long long bound);

Json roots_to_json(const std::set<RootVector>& roots);

}  // namespace strandbox
