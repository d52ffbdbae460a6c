#include "strandbox/linalg.hpp"

#include <cstdlib>
#include <utility>

#include "strandbox/errors.hpp"

namespace strandbox {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

std::uint64_t to_fp(const mpq_class& q, std::uint64_t p) {
  const std::uint64_t den = reduce(q.get_den(), p);
  if (den == 0) throw DomainError("entry " + q.get_str() + " is undefined modulo " + std::to_string(p));
  return mul_mod(reduce(q.get_num(), p), pow_mod(den, p - 2, p), p);
}

int rank_rational(Matrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      mpq_class f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

int rank_prime(const Matrix& src, std::uint64_t p) {
  const int rows = src.rows();
  const int cols = src.cols();
  std::vector<std::uint64_t> a(static_cast<size_t>(rows * cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i * cols + j)] = to_fp(src.at(i, j), p);
  }
  auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<size_t>(i * cols + j)]; };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint64_t inv = pow_mod(at(r, c), p - 2, p);
    for (int i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = mul_mod(at(i, c), inv, p);
      for (int j = c; j < cols; ++j) at(i, j) = (at(i, j) + p - mul_mod(f, at(r, j), p)) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

Field Field::parse(const std::string& spec) {
  if (spec.empty() || spec == "rat") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    try {
      size_t used = 0;
      const std::string digits = spec.substr(3);
      const auto p = std::stoull(digits, &used);
      if (used != digits.size()) throw DomainError("");
      return prime_field(p);
    } catch (const std::exception&) {
      throw DomainError("bad field spec '" + spec + "'");
    }
  }
  throw DomainError("bad field spec '" + spec + "', expected rat or fp:<prime>");
}

Field Field::from_env() {
  const char* env = std::getenv("STRANDBOX_FIELD");
  return env ? parse(env) : rationals();
}

std::string Field::to_string() const {
  return kind == Kind::Rational ? "rat" : "fp:" + std::to_string(prime);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)].push_back(at(i, j).get_str());
  }
  return out;
}

int rank(const Matrix& m, const Field& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.kind == Field::Kind::Rational ? rank_rational(m) : rank_prime(m, field.prime);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw DomainError("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    const mpq_class d = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) /= d;
      inv.at(c, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const mpq_class f = a.at(i, c);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace strandbox
