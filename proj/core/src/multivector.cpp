#include "pgamesh/multivector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace pgamesh {
namespace {

// Bit b of a mask marks basis vector e_b (bit 0 = e0, bits 1..3 = e1..e3).
// named_sign relates each named blade to the ascending-index factorization,
// e.g. e31 = e3 e1 = -e13 and e032 = e0 e3 e2 = -e023.
struct BladeMeta {
  unsigned mask;
  int named_sign;
};

constexpr std::array<BladeMeta, blades::count> kMeta = {{
    {0b0000, +1},  // 1
    {0b0010, +1},  // e1
    {0b0100, +1},  // e2
    {0b1000, +1},  // e3
    {0b0001, +1},  // e0
    {0b0011, +1},  // e01
    {0b0101, +1},  // e02
    {0b1001, +1},  // e03
    {0b0110, +1},  // e12
    {0b1010, -1},  // e31
    {0b1100, +1},  // e23
    {0b1101, -1},  // e032
    {0b1011, +1},  // e013
    {0b0111, -1},  // e021
    {0b1110, +1},  // e123
    {0b1111, +1},  // e0123
}};

constexpr std::array<const char*, blades::count> kNames = {
    "1",   "e1",  "e2",  "e3",   "e0",   "e01",  "e02",  "e03",
    "e12", "e31", "e23", "e032", "e013", "e021", "e123", "e0123"};

constexpr std::array<int, blades::count> make_mask_to_index() {
  std::array<int, blades::count> out{};
  for (std::size_t i = 0; i < blades::count; ++i) out[kMeta[i].mask] = static_cast<int>(i);
  return out;
}
constexpr std::array<int, blades::count> kMaskToIndex = make_mask_to_index();

// Transposition parity of merging two ascending factor lists.
constexpr int reorder_sign(unsigned a, unsigned b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) != 0 ? -1 : +1;
}

struct Tables {
  // Geometric product of named blades i, j lands on named blade gp_index
  // with gp_sign in {-1, 0, +1}; zero when e0 is squared.
  std::array<std::array<int, blades::count>, blades::count> gp_sign{};
  std::array<std::array<int, blades::count>, blades::count> gp_index{};
  std::array<int, blades::count> grade{};
  std::array<int, blades::count> dual_index{};
  std::array<int, blades::count> dual_sign{};
  std::array<int, blades::count> undual_index{};
  std::array<int, blades::count> undual_sign{};
  std::array<int, blades::count> reverse_sign{};
  std::array<int, blades::count> involute_sign{};
  // e0 * e_k = ideal_sign[k] * e_{ideal_index[k]} for the 8 Euclidean k.
  std::array<int, blades::count> ideal_index{};
  std::array<int, blades::count> ideal_sign{};
};

constexpr Tables make_tables() {
  Tables t{};
  for (std::size_t i = 0; i < blades::count; ++i)
    t.grade[i] = std::popcount(kMeta[i].mask);

  for (std::size_t i = 0; i < blades::count; ++i) {
    for (std::size_t j = 0; j < blades::count; ++j) {
      const unsigned ma = kMeta[i].mask, mb = kMeta[j].mask;
      if ((ma & mb & 1u) != 0) {
        t.gp_sign[i][j] = 0;
        t.gp_index[i][j] = 0;
        continue;
      }
      const int target = kMaskToIndex[ma ^ mb];
      int sign = kMeta[i].named_sign * kMeta[j].named_sign * reorder_sign(ma, mb) *
                 kMeta[target].named_sign;
      t.gp_sign[i][j] = sign;
      t.gp_index[i][j] = target;
    }
  }

  for (std::size_t i = 0; i < blades::count; ++i) {
    const int target = kMaskToIndex[kMeta[i].mask ^ 0b1111u];
    // e_i * e_target = s * e0123, hence dual(e_i) = s * e_target.
    t.dual_index[i] = target;
    t.dual_sign[i] = t.gp_sign[i][static_cast<std::size_t>(target)];
  }
  for (std::size_t i = 0; i < blades::count; ++i) {
    const int j = t.dual_index[i];
    t.undual_index[j] = static_cast<int>(i);
    t.undual_sign[j] = t.dual_sign[i];
  }

  for (std::size_t i = 0; i < blades::count; ++i) {
    const int g = t.grade[i];
    t.reverse_sign[i] = (g % 4 == 2 || g % 4 == 3) ? -1 : +1;
    t.involute_sign[i] = (g % 2 == 1) ? -1 : +1;
  }

  for (std::size_t k = 0; k < blades::count; ++k) {
    if ((kMeta[k].mask & 1u) != 0) continue;
    t.ideal_index[k] = t.gp_index[blades::e0][k];
    t.ideal_sign[k] = t.gp_sign[blades::e0][k];
  }
  return t;
}

constexpr Tables kT = make_tables();

constexpr bool is_euclidean_blade(std::size_t i) { return (kMeta[i].mask & 1u) == 0; }

}  // namespace

int blade_grade(std::size_t index) { return kT.grade[index]; }
const char* blade_name(std::size_t index) { return kNames[index]; }

Multivector& Multivector::operator+=(const Multivector& o) {
  for (std::size_t i = 0; i < blades::count; ++i) c[i] += o.c[i];
  return *this;
}
Multivector& Multivector::operator-=(const Multivector& o) {
  for (std::size_t i = 0; i < blades::count; ++i) c[i] -= o.c[i];
  return *this;
}
Multivector& Multivector::operator*=(double s) {
  for (double& v : c) v *= s;
  return *this;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector r = a;
  r += b;
  return r;
}
Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector r = a;
  r -= b;
  return r;
}
Multivector operator-(const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) r.c[i] = -a.c[i];
  return r;
}
Multivector operator*(const Multivector& a, double s) {
  Multivector r = a;
  r *= s;
  return r;
}
Multivector operator*(double s, const Multivector& a) { return a * s; }

Multivector gp(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < blades::count; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      const int s = kT.gp_sign[i][j];
      if (s != 0) r.c[static_cast<std::size_t>(kT.gp_index[i][j])] += s * ai * bj;
    }
  }
  return r;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < blades::count; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      if ((kMeta[i].mask & kMeta[j].mask) != 0) continue;
      const int s = kT.gp_sign[i][j];
      if (s != 0) r.c[static_cast<std::size_t>(kT.gp_index[i][j])] += s * ai * bj;
    }
  }
  return r;
}

Multivector dot(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < blades::count; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      const int s = kT.gp_sign[i][j];
      if (s == 0) continue;
      const std::size_t target = static_cast<std::size_t>(kT.gp_index[i][j]);
      if (kT.grade[target] != std::abs(kT.grade[i] - kT.grade[j])) continue;
      r.c[target] += s * ai * bj;
    }
  }
  return r;
}

Multivector dual(const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i)
    r.c[static_cast<std::size_t>(kT.dual_index[i])] = kT.dual_sign[i] * a.c[i];
  return r;
}

Multivector undual(const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i)
    r.c[static_cast<std::size_t>(kT.undual_index[i])] = kT.undual_sign[i] * a.c[i];
  return r;
}

Multivector join(const Multivector& a, const Multivector& b) {
  return undual(wedge(dual(a), dual(b)));
}

Multivector reverse(const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) r.c[i] = kT.reverse_sign[i] * a.c[i];
  return r;
}

Multivector grade_involute(const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i) r.c[i] = kT.involute_sign[i] * a.c[i];
  return r;
}

Multivector grade_select(const Multivector& a, int k) {
  if (k < 0 || k > 4) throw Error("grade_select: grade must be in 0..4");
  Multivector r;
  for (std::size_t i = 0; i < blades::count; ++i)
    if (kT.grade[i] == k) r.c[i] = a.c[i];
  return r;
}

SplitPair euclidean_split(const Multivector& a) {
  SplitPair s;
  for (std::size_t k = 0; k < blades::count; ++k) {
    if (!is_euclidean_blade(k)) continue;
    s.euclidean.c[k] = a.c[k];
    s.ideal_factor.c[k] =
        kT.ideal_sign[k] * a.c[static_cast<std::size_t>(kT.ideal_index[k])];
  }
  return s;
}

Multivector recombine(const SplitPair& s) {
  Multivector r = s.euclidean;
  for (std::size_t k = 0; k < blades::count; ++k) {
    if (!is_euclidean_blade(k)) continue;
    r.c[static_cast<std::size_t>(kT.ideal_index[k])] += kT.ideal_sign[k] * s.ideal_factor.c[k];
  }
  return r;
}

double euclidean_norm(const Multivector& a) {
  double q = 0.0;
  for (std::size_t i = 0; i < blades::count; ++i)
    if (is_euclidean_blade(i)) q += a.c[i] * a.c[i];
  return std::sqrt(q);
}

double ideal_norm(const Multivector& a) {
  double q = 0.0;
  for (std::size_t i = 0; i < blades::count; ++i)
    if (!is_euclidean_blade(i)) q += a.c[i] * a.c[i];
  return std::sqrt(q);
}

Multivector normalized(const Multivector& a, double tolerance) {
  const double n = euclidean_norm(a);
  if (n <= tolerance)
    throw GeometryError("cannot normalize ideal element; use ideal normalization");
  return a * (1.0 / n);
}

Multivector sandwich(const Multivector& v, const Multivector& x, double tolerance) {
  const Multivector vrev = reverse(v);
  const double n2 = gp(v, vrev).c[blades::scalar];
  if (n2 <= tolerance * tolerance) throw GeometryError("degenerate versor");
  const Multivector vinv = vrev * (1.0 / n2);

  Multivector even, odd;
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < blades::count; ++i) {
    if (x.c[i] == 0.0) continue;
    if (kT.grade[i] % 2 == 0) {
      even.c[i] = x.c[i];
      has_even = true;
    } else {
      odd.c[i] = x.c[i];
      has_odd = true;
    }
  }
  Multivector r;
  if (has_even) r += gp(gp(v, even), vinv);
  if (has_odd) r += gp(gp(grade_involute(v), odd), vinv);
  return r;
}

Multivector exp_euclidean_bivector(const Multivector& b, double tolerance) {
  for (std::size_t i = 0; i < blades::count; ++i) {
    if (i == blades::e12 || i == blades::e31 || i == blades::e23) continue;
    if (std::abs(b.c[i]) > tolerance)
      throw GeometryError("unsupported bivector: exp expects a Euclidean bivector");
  }
  const double b12 = b.c[blades::e12], b31 = b.c[blades::e31], b23 = b.c[blades::e23];
  const double theta = std::sqrt(b12 * b12 + b31 * b31 + b23 * b23);
  const double sinc = theta < 1e-12 ? 1.0 : std::sin(theta) / theta;
  Multivector r;
  r.c[blades::scalar] = std::cos(theta);
  r.c[blades::e12] = sinc * b12;
  r.c[blades::e31] = sinc * b31;
  r.c[blades::e23] = sinc * b23;
  return r;
}

Multivector point(double x, double y, double z) {
  Multivector p;
  p.c[blades::e032] = x;
  p.c[blades::e013] = y;
  p.c[blades::e021] = z;
  p.c[blades::e123] = 1.0;
  return p;
}

Multivector point(const Vec3& v) { return point(v.x, v.y, v.z); }

Multivector direction(const Vec3& v) {
  Multivector p;
  p.c[blades::e032] = v.x;
  p.c[blades::e013] = v.y;
  p.c[blades::e021] = v.z;
  return p;
}

Multivector plane(double a, double b, double c, double d) {
  Multivector p;
  p.c[blades::e1] = a;
  p.c[blades::e2] = b;
  p.c[blades::e3] = c;
  p.c[blades::e0] = d;
  return p;
}

Multivector origin() { return Multivector::basis(blades::e123); }

Vec3 point_position(const Multivector& p, double tolerance) {
  const double w = p.c[blades::e123];
  if (std::abs(w) <= tolerance)
    throw GeometryError("ideal point has no finite position");
  return {p.c[blades::e032] / w, p.c[blades::e013] / w, p.c[blades::e021] / w};
}

double point_weight(const Multivector& p) { return p.c[blades::e123]; }

std::string to_string(const Multivector& a) {
  std::string out;
  for (std::size_t i = 0; i < blades::count; ++i) {
    if (a.c[i] == 0.0) continue;
    const double v = a.c[i];
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", std::abs(v));
    out += buf;
    if (i != blades::scalar) {
      out += " ";
      out += kNames[i];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) {
  return os << to_string(a);
}

}  // namespace pgamesh
