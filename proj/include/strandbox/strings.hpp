#pragma once

// Words over direct and inverse arrows: strings, bands and their canonical
// representatives.
//
// A word w = c_1 c_2 ... c_m is written in composition order, so
// s(c_k) = t(c_{k+1}), s(w) = s(c_m) and t(w) = t(c_1). The walk of w visits
// x_1 = t(c_1) and then x_{k+1} = s(c_k).

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strandbox/algebra.hpp"

namespace strandbox {

struct Letter {
  int arrow = 0;
  bool inverse = false;

  Letter inverted() const { return {arrow, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

/// Either a trivial string 1_(vertex, sign) or a nonempty list of letters.
class StringWord {
 public:
  static StringWord trivial(int vertex, int sign = 1);
  explicit StringWord(std::vector<Letter> letters);

  bool is_trivial() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](int k) const { return letters_.at(static_cast<size_t>(k)); }
  /// Only meaningful for trivial strings.
  int vertex() const { return vertex_; }
  int sign() const { return sign_; }

  StringWord inverse() const;

  auto operator<=>(const StringWord&) const = default;

 private:
  StringWord() = default;
  std::vector<Letter> letters_;
  int vertex_ = 0;
  int sign_ = 0;
};

int letter_source(const Presentation& p, Letter c);
int letter_target(const Presentation& p, Letter c);
int word_source(const Presentation& p, const StringWord& w);
int word_target(const Presentation& p, const StringWord& w);

/// Side of the letter's end at s(c) and at t(c).
int letter_source_slot(const Presentation& p, Letter c);
int letter_target_slot(const Presentation& p, Letter c);
/// Side through which w can be extended at s(w) (right) and t(w) (left);
/// a further letter fits exactly when it occupies the opposite side.
int right_slot(const Presentation& p, const StringWord& w);
int left_slot(const Presentation& p, const StringWord& w);

struct WalkStep {
  int arrow = 0;
  bool inverse = false;  // inverse steps go from x_k to x_{k+1} along the arrow
};

struct WalkView {
  std::vector<int> vertices;  // x_1 .. x_{m+1}
  std::vector<WalkStep> steps;
};

WalkView walk(const Presentation& p, const StringWord& w);

bool is_string(const Presentation& p, const StringWord& w);
bool is_band(const Presentation& p, const StringWord& w);

/// Total order on letters: loops first, then by source vertex, arrow, and
/// direct before inverse.
bool letter_less(const Presentation& p, Letter a, Letter b);
/// Lexicographic order by letter_less; trivial strings sort by vertex and
/// before all nontrivial ones.
bool word_less(const Presentation& p, const StringWord& a, const StringWord& b);
/// Sort by length, then lexicographically.
bool word_shortlex_less(const Presentation& p, const StringWord& a, const StringWord& b);

StringWord canonical_string(const Presentation& p, const StringWord& w);
StringWord canonical_band(const Presentation& p, const StringWord& w);

StringWord rotate(const StringWord& w, int k);
StringWord power(const StringWord& w, int k);

/// u·v as a string, or nullopt if the juxtaposition is not a string.
std::optional<StringWord> concat(const Presentation& p, const StringWord& u, const StringWord& v);
/// Removes the first / last k letters; removing all letters leaves the
/// trivial string on the exposed side.
StringWord drop_front(const Presentation& p, const StringWord& w, int k);
StringWord drop_back(const Presentation& p, const StringWord& w, int k);
StringWord take_front(const StringWord& w, int k);
StringWord take_back(const StringWord& w, int k);

std::vector<StringWord> enumerate_strings(const Presentation& p, int max_len);

/// The walk from n down to 1 along the spine.
StringWord spine_walk(const Presentation& p);
std::vector<StringWord> enumerate_bands(const Presentation& p, int max_dl);
int delta_length(const Presentation& p, const StringWord& band);

/// Text syntax: "a21~.a32~.e3.a32.a21", "triv(2)", "triv(2,-1)".
StringWord parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, const StringWord& w);

}  // namespace strandbox
