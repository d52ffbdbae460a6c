#pragma once

// Executable checks tying tau-locally free modules to positive roots:
// witness generation, the rank vector / root comparison, Coxeter
// compatibility along tau-orbits and the invariants of the exceptional tube.

#include <map>
#include <string>
#include <vector>

#include "strandbox/artrans.hpp"

namespace strandbox {

enum class WitnessFamily { Preprojective, Preinjective, Tube, Band };

std::string to_string(WitnessFamily f);

struct Witness {
  WitnessFamily family = WitnessFamily::Preprojective;
  ModuleRef module;
  int level = 0;  // quasi-length for tube and band witnesses
  int dl = 0;     // delta-length of the band; its degree is module.degree
};

/// Modules from the four tau-locally free families with rank height at most
/// bound, keyed by rank vector.
std::map<RootVector, std::vector<Witness>> tau_locally_free_rank_vectors(const Presentation& p,
                                                                         long long bound);

/// tau^k(m) is zero or locally free for all |k| <= window.
bool is_tau_locally_free(const Presentation& p, const ModuleRef& m, int window = 10);

struct GLSReport {
  int n = 0;
  std::string orientation;
  long long bound = 0;
  std::map<RootVector, Witness> real;                   // unique witnesses
  std::map<RootVector, std::vector<Witness>> imaginary;
  std::vector<RootVector> missing;                      // roots without a witness
  std::vector<RootVector> extra;                        // rank vectors that are not roots
  std::vector<RootVector> ambiguous;                    // real roots with several witnesses
  std::vector<RootVector> thin_imaginary;               // imaginary roots lacking a family
  std::vector<std::string> not_tau_locally_free;        // witnesses failing re-validation
  bool bottom_rigid = true;
  bool pass = false;
};

GLSReport check_gls(const Presentation& p, long long bound, int window = 10);
Json gls_report_to_json(const Presentation& p, const GLSReport& r);
std::string gls_report_table(const Presentation& p, const GLSReport& r);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

/// rank(tau^-r P_{i_k}) and rank(tau^s I_{i_k}) against the Coxeter orbits of
/// beta_k and gamma_k for r, s <= depth, plus pairwise distinctness.
CheckReport check_coxeter_compatibility(const Presentation& p, const AdmissibleSeq& seq, int depth);

CheckReport check_tube_invariants(const Presentation& p);

Json check_report_to_json(const CheckReport& r);

}  // namespace strandbox
