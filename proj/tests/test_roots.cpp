#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strandbox/errors.hpp"
#include "strandbox/roots.hpp"

using namespace strandbox;

TEST_CASE("Cartan matrix, symmetrizer and delta") {
  auto cd = cartan(3);
  CHECK(cd.C == std::vector<std::vector<int>>{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
  CHECK(cd.D == std::vector<int>{2, 1, 2});
  for (int n = 3; n <= 8; ++n) {
    auto c = cartan(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(c.d(i) * c.c(i, j) == c.d(j) * c.c(j, i));
    }
  }
  CHECK(delta(4) == RootVector{1, 2, 2, 1});
  CHECK_THROWS_AS(cartan(2), DomainError);
}

TEST_CASE("reflections") {
  auto cd = cartan(3);
  CHECK(reflect(cd, 1, simple_root(3, 2)) == RootVector{1, 1, 0});
  CHECK(reflect(cd, 2, simple_root(3, 1)) == RootVector{1, 2, 0});
  for (int i = 1; i <= 3; ++i) CHECK(reflect(cd, i, simple_root(3, i)) == RootVector{-simple_root(3, i)[0], -simple_root(3, i)[1], -simple_root(3, i)[2]});
}

TEST_CASE("forms") {
  for (int n = 3; n <= 6; ++n) {
    auto cd = cartan(n);
    for (int i = 1; i <= n; ++i) CHECK(quadratic_form(cd, simple_root(n, i)) == cd.d(i));
    CHECK(quadratic_form(cd, delta(n)) == 0);
    for (int i = 1; i <= n; ++i) CHECK(reflect(cd, i, delta(n)) == delta(n));
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    auto cd = cartan(n);
    RootVector x(static_cast<size_t>(n));
    RootVector y(static_cast<size_t>(n));
    for (auto& v : x) v = coord(rng);
    for (auto& v : y) v = coord(rng);
    for (const auto& o : Orientation::all(n)) {
      CHECK(ringel_form(cd, o, x, y) + ringel_form(cd, o, y, x) == sym_form(cd, x, y));
    }
    for (int i = 1; i <= n; ++i) {
      CHECK(quadratic_form(cd, reflect(cd, i, x)) == quadratic_form(cd, x));
      CHECK(reflect(cd, i, reflect(cd, i, x)) == x);
    }
  }
}

TEST_CASE("positive roots agree with the descent oracle") {
  auto cd = cartan(3);
  auto roots = enumerate_positive_roots(cd, 4);
  for (const auto& r : {RootVector{1, 0, 0}, RootVector{0, 1, 0}, RootVector{0, 0, 1},
                        RootVector{1, 1, 0}, RootVector{1, 2, 0}, RootVector{1, 2, 1}}) {
    CHECK(roots.count(r) == 1);
  }
  for (int n = 3; n <= 5; ++n) {
    auto c = cartan(n);
    const long long bound = 10;
    auto all = enumerate_positive_roots(c, bound);
    size_t expected = 0;
    RootVector x(static_cast<size_t>(n), 0);
    // every vector in the box with height <= bound
    auto rec = [&](auto&& self, int i, long long h) -> void {
      if (i == n) {
        if (h > 0 && oracle::is_root_by_descent(c, x)) {
          ++expected;
          CHECK(all.count(x) == 1);
        }
        return;
      }
      for (long long v = 0; h + v <= bound; ++v) {
        x[static_cast<size_t>(i)] = v;
        self(self, i + 1, h + v);
      }
      x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
    CHECK(all.size() == expected);
    for (const auto& r : all) {
      const long long q = quadratic_form(c, r);
      CHECK((q == 0 || q == 1 || q == 2));
      if (q != 0) {
        RootVector shifted = r;
        for (int i = 0; i < n; ++i) shifted[static_cast<size_t>(i)] += delta(n)[static_cast<size_t>(i)];
        if (height(shifted) <= bound) CHECK(all.count(shifted) == 1);
      }
    }
  }
}

TEST_CASE("admissible sequences") {
  auto lin = Orientation::linear(3);
  CHECK(is_admissible(lin, {{3, 2, 1}, Polarity::Plus}));
  CHECK(!is_admissible(lin, {{1, 2, 3}, Polarity::Plus}));
  CHECK(is_admissible(lin, {{1, 2, 3}, Polarity::Minus}));
  for (int n = 3; n <= 5; ++n) {
    for (const auto& o : Orientation::all(n)) {
      auto plus = admissible_sequences(o, Polarity::Plus);
      CHECK(!plus.empty());
      for (const auto& s : plus) {
        CHECK(is_admissible(o, reversed(s)));
        CHECK(is_admissible(o.reflected_at(s.order[0]), rotated(s)));
      }
      CHECK(plus.size() == admissible_sequences(o, Polarity::Minus).size());
    }
  }
}

TEST_CASE("Coxeter transformations, beta and gamma") {
  auto cd = cartan(3);
  AdmissibleSeq seq{{3, 2, 1}, Polarity::Plus};
  CHECK(beta(cd, seq, 1) == simple_root(3, 3));
  CHECK(gamma(cd, seq, 3) == simple_root(3, 1));
  CHECK(coxeter(cd, seq, simple_root(3, 2)) == RootVector{1, 1, 1});
  for (int n = 3; n <= 5; ++n) {
    auto c = cartan(n);
    for (const auto& o : Orientation::all(n)) {
      for (auto pol : {Polarity::Plus, Polarity::Minus}) {
        for (const auto& s : admissible_sequences(o, pol)) {
          CHECK(coxeter(c, s, delta(n)) == delta(n));
          CHECK(coxeter(c, s, coxeter(c, s, simple_root(n, 1), 3), -3) == simple_root(n, 1));
          CHECK(coxeter(c, reversed(s), simple_root(n, 2)) == coxeter(c, s, simple_root(n, 2), -1));
        }
      }
    }
  }
}

namespace {

std::set<RootVector> orbit_set(const CartanData& cd, const AdmissibleSeq& s, int depth) {
  std::set<RootVector> out;
  for (int k = 1; k <= cd.n; ++k) {
    for (int r = 0; r <= depth; ++r) {
      out.insert(coxeter(cd, s, beta(cd, s, k), -r));
      out.insert(coxeter(cd, s, gamma(cd, s, k), r));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the first reflection maps orbit sets onto those of the rotated sequence") {
  for (int n = 3; n <= 5; ++n) {
    auto cd = cartan(n);
    for (const auto& o : Orientation::all(n)) {
      for (const auto& s : admissible_sequences(o, Polarity::Plus)) {
        const int i1 = s.order[0];
        const auto a = simple_root(n, i1);
        auto here = orbit_set(cd, s, 6);
        auto there = orbit_set(cd, rotated(s), 7);
        for (const auto& x : here) {
          if (x == a) continue;
          CHECK(there.count(reflect(cd, i1, x)) == 1);
        }
        auto there_small = orbit_set(cd, rotated(s), 5);
        auto here_big = orbit_set(cd, s, 6);
        for (const auto& x : there_small) {
          if (x == a) continue;
          CHECK(here_big.count(reflect(cd, i1, x)) == 1);
        }
      }
    }
  }
}

TEST_CASE("closed form matches the reflection closure") {
  for (int n = 3; n <= 5; ++n) {
    auto cd = cartan(n);
    for (const auto& o : Orientation::all(n)) {
      auto bfs = enumerate_positive_roots(cd, 14);
      for (const auto& s : admissible_sequences(o, Polarity::Plus)) {
        auto cf = closed_form_positive_roots(cd, o, s, 14);
        CHECK(cf.all() == bfs);
        for (const auto& x : cf.preprojective) CHECK(quadratic_form(cd, x) > 0);
      }
    }
  }
  CHECK(closed_form_positive_roots(cartan(3), Orientation::linear(3), {{3, 2, 1}, Polarity::Plus}, 0).all().empty());
}
