#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "pgamesh/errors.hpp"
#include "pgamesh/vec3.hpp"

namespace pgamesh {

/// Coefficient indices of the fixed multivector basis
///   [1, e1, e2, e3, e0, e01, e02, e03, e12, e31, e23, e032, e013, e021, e123, e0123]
/// with signature e1^2 = e2^2 = e3^2 = +1 and e0^2 = 0.
///
/// In this order a normalized point at (x, y, z) reads off directly as
/// x*e032 + y*e013 + z*e021 + e123, and a plane ax + by + cz + d = 0 as
/// a*e1 + b*e2 + c*e3 + d*e0.
namespace blades {
inline constexpr std::size_t scalar = 0;
inline constexpr std::size_t e1 = 1;
inline constexpr std::size_t e2 = 2;
inline constexpr std::size_t e3 = 3;
inline constexpr std::size_t e0 = 4;
inline constexpr std::size_t e01 = 5;
inline constexpr std::size_t e02 = 6;
inline constexpr std::size_t e03 = 7;
inline constexpr std::size_t e12 = 8;
inline constexpr std::size_t e31 = 9;
inline constexpr std::size_t e23 = 10;
inline constexpr std::size_t e032 = 11;
inline constexpr std::size_t e013 = 12;
inline constexpr std::size_t e021 = 13;
inline constexpr std::size_t e123 = 14;
inline constexpr std::size_t e0123 = 15;
inline constexpr std::size_t count = 16;
}  // namespace blades

/// Grade of each basis blade, by coefficient index.
int blade_grade(std::size_t index);

/// Printable name of each basis blade ("1", "e1", ..., "e0123").
const char* blade_name(std::size_t index);

/// Default absolute tolerance for zero tests on unit-scale data.
inline constexpr double kDefaultTolerance = 1e-9;

/// A general element of the 16-dimensional algebra. Plain value type: freely
/// copyable, no interior mutation, safe to share across threads.
struct Multivector {
  std::array<double, blades::count> c{};

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  static Multivector scalar(double s) {
    Multivector m;
    m.c[blades::scalar] = s;
    return m;
  }
  static Multivector basis(std::size_t index, double weight = 1.0) {
    Multivector m;
    m.c[index] = weight;
    return m;
  }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(const Multivector& a, double s);
Multivector operator*(double s, const Multivector& a);

/// Geometric (Clifford) product.
Multivector gp(const Multivector& a, const Multivector& b);
/// Outer product; the meet of blades (two planes give their line).
Multivector wedge(const Multivector& a, const Multivector& b);
/// Regressive product via the Hodge dual; the join of blades (two points
/// give their line). join(a, b) == undual(dual(a) ^ dual(b)).
Multivector join(const Multivector& a, const Multivector& b);
/// Interior product as the grade |r - s| part of the geometric product of
/// the grade-r and grade-s parts. Covers vector.vector and the projection
/// contraction (o . p); no claim is made for the remaining cases.
Multivector dot(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }
inline Multivector operator^(const Multivector& a, const Multivector& b) { return wedge(a, b); }
inline Multivector operator&(const Multivector& a, const Multivector& b) { return join(a, b); }

/// Hodge dual, fixed by e_J * dual(e_J) = e0123 for every basis blade e_J.
/// This pins every sign, including dual(e0123) = 1 and dual(1) = e0123.
/// undual is the inverse map: undual(dual(A)) == dual(undual(A)) == A,
/// exactly (both are signed basis permutations).
Multivector dual(const Multivector& a);
Multivector undual(const Multivector& a);

/// Reversion: flips sign on grades 2 and 3 (mod 4).
Multivector reverse(const Multivector& a);
/// Grade involution: flips sign on odd grades.
Multivector grade_involute(const Multivector& a);
/// Projection onto the grade-k part, k in 0..4.
Multivector grade_select(const Multivector& a, int k);

/// Euclidean and ideal parts of A = euclidean + e0 * ideal_factor.
/// Both live in the e0-free subalgebra; the split is an exact coefficient
/// partition and recombine() restores A bit for bit.
struct SplitPair {
  Multivector euclidean;
  Multivector ideal_factor;
};
SplitPair euclidean_split(const Multivector& a);
Multivector recombine(const SplitPair& s);

/// sqrt(<reverse(A) A>_0): the 2-norm of the e0-free coefficients.
double euclidean_norm(const Multivector& a);
/// Norm of the ideal factor; equals ||A & origin()|| and ||dual(A)||.
double ideal_norm(const Multivector& a);

/// Divides by the Euclidean norm. Throws GeometryError for (near-)ideal
/// input, which has no Euclidean normalization.
Multivector normalized(const Multivector& a, double tolerance = kDefaultTolerance);

/// Applies the versor v (a product of invertible vectors) to x by the
/// sandwich product. Odd-grade parts of x pick up the orientation sign of
/// odd versors, so reflecting a plane in itself returns its negation.
/// Throws GeometryError when v has no inverse (zero Euclidean norm).
Multivector sandwich(const Multivector& v, const Multivector& x,
                     double tolerance = kDefaultTolerance);

/// exp of a Euclidean bivector B with B*B = -theta^2: returns the rotor
/// cos(theta) + sin(theta) * B/theta. Throws GeometryError if any
/// coefficient outside {e12, e31, e23} exceeds the tolerance.
Multivector exp_euclidean_bivector(const Multivector& b,
                                   double tolerance = kDefaultTolerance);

/// Embeddings. point() has e123 weight exactly 1; origin() == point(0,0,0).
Multivector point(double x, double y, double z);
Multivector point(const Vec3& v);
/// Direction (ideal point) with zero weight.
Multivector direction(const Vec3& v);
Multivector plane(double a, double b, double c, double d);
Multivector origin();

/// Position of a (not necessarily normalized) point element. Throws
/// GeometryError when the weight is below the tolerance.
Vec3 point_position(const Multivector& p, double tolerance = kDefaultTolerance);
/// The e123 coefficient.
double point_weight(const Multivector& p);

/// Renders a signed sum over the basis names, e.g. "1.5 + 2 e12 - 0.5 e0123".
std::string to_string(const Multivector& a);
std::ostream& operator<<(std::ostream& os, const Multivector& a);

}  // namespace pgamesh
