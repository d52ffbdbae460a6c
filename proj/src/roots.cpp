#include "strandbox/roots.hpp"

#include <algorithm>
#include <deque>

#include "strandbox/errors.hpp"

namespace strandbox {

CartanData cartan(int n) {
  if (n < 3) throw DomainError("type C~_{n-1} needs n >= 3, got " + std::to_string(n));
  CartanData cd;
  cd.n = n;
  cd.C.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    cd.C[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 2;
    if (i < n) {
      cd.C[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = -1;
      cd.C[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = -1;
    }
  }
  cd.C[1][0] = -2;
  cd.C[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = -2;
  cd.D.assign(static_cast<size_t>(n), 1);
  cd.D.front() = 2;
  cd.D.back() = 2;
  return cd;
}

RootVector simple_root(int n, int i) {
  if (i < 1 || i > n) throw DomainError("simple root index out of range");
  RootVector x(static_cast<size_t>(n), 0);
  x[static_cast<size_t>(i - 1)] = 1;
  return x;
}

RootVector delta(int n) {
  RootVector x(static_cast<size_t>(n), 2);
  x.front() = 1;
  x.back() = 1;
  return x;
}

long long height(const RootVector& x) {
  long long h = 0;
  for (auto v : x) h += v;
  return h;
}

bool is_nonnegative(const RootVector& x) {
  return std::all_of(x.begin(), x.end(), [](long long v) { return v >= 0; });
}

namespace {

void check_size(const CartanData& cd, const RootVector& x) {
  if (static_cast<int>(x.size()) != cd.n) throw DomainError("root vector has the wrong length");
}

}  // namespace

RootVector reflect(const CartanData& cd, int i, const RootVector& x) {
  check_size(cd, x);
  if (i < 1 || i > cd.n) throw DomainError("reflection index out of range");
  long long pairing = 0;
  for (int j = 1; j <= cd.n; ++j) pairing += cd.c(i, j) * x[static_cast<size_t>(j - 1)];
  RootVector y = x;
  y[static_cast<size_t>(i - 1)] -= pairing;
  return y;
}

long long sym_form(const CartanData& cd, const RootVector& x, const RootVector& y) {
  check_size(cd, x);
  check_size(cd, y);
  long long s = 0;
  for (int i = 1; i <= cd.n; ++i) {
    for (int j = 1; j <= cd.n; ++j) {
      s += x[static_cast<size_t>(i - 1)] * cd.d(i) * cd.c(i, j) * y[static_cast<size_t>(j - 1)];
    }
  }
  return s;
}

long long quadratic_form(const CartanData& cd, const RootVector& x) { return sym_form(cd, x, x) / 2; }

long long ringel_form(const CartanData& cd, const Orientation& o, const RootVector& x,
                      const RootVector& y) {
  check_size(cd, x);
  check_size(cd, y);
  if (o.n() != cd.n) throw DomainError("orientation size does not match the Cartan datum");
  long long s = 0;
  for (int i = 1; i <= cd.n; ++i) {
    s += cd.d(i) * x[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(i - 1)];
  }
  for (auto [j, i] : o.omega()) {
    s += cd.d(i) * cd.c(i, j) * x[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(j - 1)];
  }
  return s;
}

std::set<RootVector> enumerate_positive_roots(const CartanData& cd, long long bound) {
  std::set<RootVector> out;
  if (bound < 1) return out;
  std::deque<RootVector> queue;
  for (int i = 1; i <= cd.n; ++i) {
    auto a = simple_root(cd.n, i);
    out.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVector x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= cd.n; ++i) {
      RootVector y = reflect(cd, i, x);
      if (!is_nonnegative(y) || height(y) > bound) continue;
      if (out.insert(y).second) queue.push_back(y);
    }
  }
  const RootVector d = delta(cd.n);
  for (long long m = 1; m * height(d) <= bound; ++m) {
    RootVector md = d;
    for (auto& v : md) v *= m;
    out.insert(md);
  }
  return out;
}

namespace {

bool is_target(const Orientation& o, int v, Polarity pol) {
  return pol == Polarity::Plus ? o.is_sink(v) : o.is_source(v);
}

}  // namespace

std::vector<AdmissibleSeq> admissible_sequences(const Orientation& o, Polarity polarity) {
  const int n = o.n();
  std::vector<AdmissibleSeq> out;
  std::vector<int> order;
  std::vector<bool> used(static_cast<size_t>(n + 1), false);
  auto rec = [&](auto&& self, const Orientation& cur) -> void {
    if (static_cast<int>(order.size()) == n) {
      out.push_back({order, polarity});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)] || !is_target(cur, v, polarity)) continue;
      used[static_cast<size_t>(v)] = true;
      order.push_back(v);
      self(self, cur.reflected_at(v));
      order.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec(rec, o);
  return out;
}

bool is_admissible(const Orientation& o, const AdmissibleSeq& seq) {
  const int n = o.n();
  if (static_cast<int>(seq.order.size()) != n) return false;
  std::vector<int> sorted = seq.order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[static_cast<size_t>(k)] != k + 1) return false;
  }
  Orientation cur = o;
  for (int v : seq.order) {
    if (!is_target(cur, v, seq.polarity)) return false;
    cur = cur.reflected_at(v);
  }
  return true;
}

AdmissibleSeq reversed(const AdmissibleSeq& seq) {
  AdmissibleSeq r{seq.order, seq.polarity == Polarity::Plus ? Polarity::Minus : Polarity::Plus};
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

AdmissibleSeq rotated(const AdmissibleSeq& seq) {
  AdmissibleSeq r = seq;
  std::rotate(r.order.begin(), r.order.begin() + 1, r.order.end());
  return r;
}

RootVector coxeter(const CartanData& cd, const AdmissibleSeq& seq, const RootVector& x, int k) {
  RootVector y = x;
  for (int step = 0; step < std::abs(k); ++step) {
    if (k > 0) {
      for (int v : seq.order) y = reflect(cd, v, y);
    } else {
      for (auto it = seq.order.rbegin(); it != seq.order.rend(); ++it) y = reflect(cd, *it, y);
    }
  }
  return y;
}

RootVector tau_coxeter(const CartanData& cd, const AdmissibleSeq& seq, const RootVector& x, int k) {
  return coxeter(cd, seq, x, seq.polarity == Polarity::Plus ? k : -k);
}

namespace {

// s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})
RootVector forward_family(const CartanData& cd, const std::vector<int>& order, int k) {
  RootVector x = simple_root(cd.n, order[static_cast<size_t>(k - 1)]);
  for (int j = k - 1; j >= 1; --j) x = reflect(cd, order[static_cast<size_t>(j - 1)], x);
  return x;
}

// s_{i_n} ... s_{i_{k+1}}(alpha_{i_k})
RootVector backward_family(const CartanData& cd, const std::vector<int>& order, int k) {
  RootVector x = simple_root(cd.n, order[static_cast<size_t>(k - 1)]);
  for (int j = k + 1; j <= cd.n; ++j) x = reflect(cd, order[static_cast<size_t>(j - 1)], x);
  return x;
}

void check_k(const CartanData& cd, const AdmissibleSeq& seq, int k) {
  if (static_cast<int>(seq.order.size()) != cd.n || k < 1 || k > cd.n) {
    throw DomainError("sequence position out of range");
  }
}

}  // namespace

RootVector beta(const CartanData& cd, const AdmissibleSeq& seq, int k) {
  check_k(cd, seq, k);
  return seq.polarity == Polarity::Plus ? forward_family(cd, seq.order, k)
                                        : backward_family(cd, seq.order, k);
}

RootVector gamma(const CartanData& cd, const AdmissibleSeq& seq, int k) {
  check_k(cd, seq, k);
  return seq.polarity == Polarity::Plus ? backward_family(cd, seq.order, k)
                                        : forward_family(cd, seq.order, k);
}

RootVector regular_seed_root(const Orientation& o) {
  for (int v = 1; v <= o.n(); ++v) {
    if (!o.is_admissible(v)) return simple_root(o.n(), v);
  }
  RootVector a = simple_root(o.n(), 1);
  a[1] = 1;
  return a;
}

std::set<RootVector> ClosedFormRoots::all() const {
  std::set<RootVector> out = preprojective;
  out.insert(preinjective.begin(), preinjective.end());
  out.insert(regular.begin(), regular.end());
  out.insert(imaginary.begin(), imaginary.end());
  return out;
}

ClosedFormRoots closed_form_positive_roots(const CartanData& cd, const Orientation& o,
                                           const AdmissibleSeq& seq, long long bound) {
  if (seq.polarity != Polarity::Plus || !is_admissible(o, seq)) {
    throw DomainError("closed form needs a plus-admissible sequence for the orientation");
  }
  ClosedFormRoots out;
  if (bound < 1) return out;
  const int n = cd.n;
  auto keep = [&](const RootVector& x) { return is_nonnegative(x) && height(x) <= bound; };
  // Heights in the Coxeter orbits of preprojective and preinjective roots
  // grow by |delta| = 2n-2 every n-1 steps, so this many steps suffices.
  const long long steps = bound + 2LL * n + 2;
  for (int k = 1; k <= n; ++k) {
    RootVector b = beta(cd, seq, k);
    RootVector g = gamma(cd, seq, k);
    for (long long r = 0; r <= steps; ++r) {
      if (keep(b)) out.preprojective.insert(b);
      if (keep(g)) out.preinjective.insert(g);
      b = coxeter(cd, seq, b, -1);
      g = coxeter(cd, seq, g, 1);
    }
  }
  const RootVector d = delta(n);
  const RootVector alpha = regular_seed_root(o);
  for (int p = 0; p < n - 1; ++p) {
    for (int q = 0; q < n - 2; ++q) {
      RootVector x(static_cast<size_t>(n), 0);
      for (int j = p; j <= p + q; ++j) {
        RootVector t = coxeter(cd, seq, alpha, j);
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] += t[static_cast<size_t>(i)];
      }
      for (long long m = 0;; ++m) {
        RootVector y = x;
        for (int i = 0; i < n; ++i) y[static_cast<size_t>(i)] += m * d[static_cast<size_t>(i)];
        if (height(y) > bound) break;
        if (is_nonnegative(y)) out.regular.insert(y);
      }
    }
  }
  for (long long m = 1; m * height(d) <= bound; ++m) {
    RootVector md = d;
    for (auto& v : md) v *= m;
    out.imaginary.insert(md);
  }
  return out;
}

Json roots_to_json(const std::set<RootVector>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) arr.push_back(r);
  return arr;
}

}  // namespace strandbox
