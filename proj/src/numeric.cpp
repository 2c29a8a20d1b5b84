#include "corelat/numeric.hpp"

#include <limits>

namespace corelat {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: " + s);
  }
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

long long to_ll(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
    throw Overflow("integer out of 64-bit range: " + z.str());
  return z.convert_to<long long>();
}

long long to_ll(const Rational& r) {
  if (!is_integer(r)) throw NonIntegralImage("expected an integer, got " + to_string(r));
  return to_ll(numerator(r));
}

Integer floor_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

Integer isqrt(const Integer& z) {
  if (z < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(z);
}

long long isqrt(long long z) {
  if (z < 0) throw std::domain_error("isqrt of negative");
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(z)));
  while (r * r > z) --r;
  while ((r + 1) * (r + 1) <= z) ++r;
  return r;
}

bool is_square(long long z) {
  if (z < 0) return false;
  long long r = isqrt(z);
  return r * r == z;
}

Vec to_vec(const IVec& v) {
  Vec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

IVec to_ivec(const Vec& v) {
  IVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_ll(x));
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scaled(const Rational& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_vec(const RMatrix& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

RMatrix transpose(const RMatrix& m) {
  if (m.empty()) return {};
  RMatrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  RMatrix bt = transpose(b);
  RMatrix out(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) out[i][j] = dot(a[i], bt[j]);
  return out;
}

RMatrix identity_matrix(std::size_t n) {
  RMatrix m(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<Vec> solve_linear(const RMatrix& a, const Vec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  RMatrix m(rows, Vec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

RMatrix inverse(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix out(n, Vec(n));
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n, Rational(0));
    e[k] = 1;
    auto col = solve_linear(m, e);
    if (!col) throw InternalInconsistency("singular matrix");
    for (std::size_t i = 0; i < n; ++i) out[i][k] = (*col)[i];
  }
  // solve_linear zeroes free variables, so confirm the product really is the identity
  if (mat_mul(m, out) != identity_matrix(n)) throw InternalInconsistency("singular matrix");
  return out;
}

std::string format_tuple(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string format_tuple(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace corelat
