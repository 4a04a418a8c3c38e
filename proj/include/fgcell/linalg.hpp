#pragma once

#include <array>

#include "fgcell/scalar.hpp"

namespace fg {

using Vec3 = std::array<Scalar, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major

inline Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator*(const Scalar& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

// det of the matrix whose columns are a, b, c.
inline Scalar det_cols(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return m;
}

inline Scalar det(const Mat3& m) { return det_cols(m[0], m[1], m[2]); }  // det(M) = det(M^T)

inline Scalar trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) { return {dot(a[0], v), dot(a[1], v), dot(a[2], v)}; }

inline Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

// Adjugate, so that m * adjugate(m) = det(m) * I.
inline Mat3 adjugate(const Mat3& m) {
  Vec3 c0 = cross(m[1], m[2]), c1 = cross(m[2], m[0]), c2 = cross(m[0], m[1]);
  return transpose(Mat3{c0, c1, c2});
}

// Sum of the principal 2x2 minors.
inline Scalar minor_sum(const Mat3& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2] -
         m[1][2] * m[2][1];
}

}  // namespace fg
