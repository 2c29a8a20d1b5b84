#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corelat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;
using IVec = std::vector<long long>;
using RMatrix = std::vector<Vec>;
using IMatrix = std::vector<IVec>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownType : Error { using Error::Error; };
struct NotInRootSpan : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct UnsupportedLattice : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct NotACore : Error { using Error::Error; };
struct BadCharge : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };
struct NonIntegralImage : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct Unsolvable : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

// Checked narrowing; throws Overflow or NonIntegralImage.
long long to_ll(const Rational& r);
long long to_ll(const Integer& z);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
Integer isqrt(const Integer& z);
long long isqrt(long long z);
bool is_square(long long z);

Vec to_vec(const IVec& v);
IVec to_ivec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
Vec mat_vec(const RMatrix& m, const Vec& v);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& m);
RMatrix identity_matrix(std::size_t n);

// Exact Gauss-Jordan. Rows of `a` are equations. Returns nullopt when inconsistent;
// free variables (if any) are set to zero.
std::optional<Vec> solve_linear(const RMatrix& a, const Vec& b);
// Throws InternalInconsistency when singular.
RMatrix inverse(const RMatrix& m);

std::string format_tuple(const IVec& v);
std::string format_tuple(const Vec& v);

}  // namespace corelat
