#include "ddfpp/eigensystem.hpp"

#include <algorithm>
#include <cmath>

namespace ddfpp {

namespace {

constexpr double kTangentialThreshold = 1e-12;  // |B_t|^2 / rho below this: pick a fixed tangential direction
constexpr double kSplitThreshold = 1e-12;       // relative fast/slow split below which alpha_f = alpha_s

}  // namespace

Mat8 primitive_jacobian(const PrimitiveState& w, double gamma) {
  Mat8 A{};
  const double rho = w.rho, u = w.v[0];
  const double bx = w.B[0], by = w.B[1], bz = w.B[2];
  for (int d = 0; d < 8; ++d) A[d * 8 + d] = u;
  A[0 * 8 + 1] = rho;
  A[1 * 8 + 5] = by / rho;
  A[1 * 8 + 6] = bz / rho;
  A[1 * 8 + 7] = 1.0 / rho;
  A[2 * 8 + 5] = -bx / rho;
  A[3 * 8 + 6] = -bx / rho;
  A[5 * 8 + 1] = by;
  A[5 * 8 + 2] = -bx;
  A[6 * 8 + 1] = bz;
  A[6 * 8 + 3] = -bx;
  A[7 * 8 + 1] = gamma * w.p;
  return A;
}

void primitive_eigenvectors(const PrimitiveState& w, double gamma, Mat8& R, Mat8& L, std::array<double, 8>& speeds) {
  R.fill(0.0);
  L.fill(0.0);
  const double rho = w.rho, srho = std::sqrt(rho);
  const double bx = w.B[0], by = w.B[1], bz = w.B[2];
  const double a2 = gamma * w.p / rho, a = std::sqrt(a2);
  const double cax2 = bx * bx / rho;
  const double bt2 = (by * by + bz * bz) / rho;
  const double b2 = cax2 + bt2;
  const double s = a2 + b2;
  const double delta = std::sqrt(std::max((a2 - b2) * (a2 - b2) + 4.0 * a2 * bt2, 0.0));  // cf^2 - cs^2
  const double cf2 = 0.5 * (s + delta);
  const double cs2 = cf2 > 0.0 ? a2 * cax2 / cf2 : 0.0;
  const double cf = std::sqrt(cf2), cs = std::sqrt(std::max(cs2, 0.0)), ca = std::sqrt(cax2);

  double betay, betaz;
  if (bt2 < kTangentialThreshold) {
    betay = betaz = 1.0 / std::sqrt(2.0);
  } else {
    const double bt = std::sqrt(by * by + bz * bz);
    betay = by / bt;
    betaz = bz / bt;
  }
  double alf, als;
  if (delta <= kSplitThreshold * s) {
    alf = als = 1.0 / std::sqrt(2.0);
  } else {
    alf = std::sqrt(std::clamp((a2 - cs2) / delta, 0.0, 1.0));
    als = std::sqrt(std::clamp((cf2 - a2) / delta, 0.0, 1.0));
  }
  const double sg = bx >= 0.0 ? 1.0 : -1.0;
  const double u = w.v[0];
  speeds = {u - cf, u - ca, u - cs, u, u, u + cs, u + ca, u + cf};

  auto setR = [&](int col, std::array<double, 8> v) {
    for (int r = 0; r < 8; ++r) R[r * 8 + col] = v[r];
  };
  auto setL = [&](int row, std::array<double, 8> v) {
    for (int c = 0; c < 8; ++c) L[row * 8 + c] = v[c];
  };

  for (int pm = -1; pm <= 1; pm += 2) {
    const double e = pm;
    const int fcol = pm < 0 ? 0 : 7, acol = pm < 0 ? 1 : 6, scol = pm < 0 ? 2 : 5;
    setR(fcol, {rho * alf, e * alf * cf, -e * als * cs * betay * sg, -e * als * cs * betaz * sg, 0.0,
                als * srho * a * betay, als * srho * a * betaz, alf * rho * a2});
    setR(acol, {0.0, 0.0, -betaz, betay, 0.0, e * sg * srho * betaz, -e * sg * srho * betay, 0.0});
    setR(scol, {rho * als, e * als * cs, e * alf * cf * betay * sg, e * alf * cf * betaz * sg, 0.0,
                -alf * srho * a * betay, -alf * srho * a * betaz, als * rho * a2});
    const double n = 0.5 / a2;
    setL(fcol, {0.0, n * e * alf * cf, -n * e * als * cs * betay * sg, -n * e * als * cs * betaz * sg, 0.0,
                n * als * a * betay / srho, n * als * a * betaz / srho, n * alf / rho});
    setL(acol, {0.0, 0.0, -0.5 * betaz, 0.5 * betay, 0.0, 0.5 * e * sg * betaz / srho, -0.5 * e * sg * betay / srho,
                0.0});
    setL(scol, {0.0, n * e * als * cs, n * e * alf * cf * betay * sg, n * e * alf * cf * betaz * sg, 0.0,
                -n * alf * a * betay / srho, -n * alf * a * betaz / srho, n * als / rho});
  }
  setR(3, {1, 0, 0, 0, 0, 0, 0, 0});
  setL(3, {1, 0, 0, 0, 0, 0, 0, -1.0 / a2});
  setR(4, {0, 0, 0, 0, 1, 0, 0, 0});
  setL(4, {0, 0, 0, 0, 1, 0, 0, 0});
}

CharacteristicBasis characteristic_basis(const ConservedState& u_in, Axis axis, const IdealEos& eos) {
  CharacteristicBasis basis;
  const ConservedState u = axis == Axis::X ? u_in : swap_xy(u_in);
  if (!is_admissible(u)) return basis;  // invalid: caller falls back to componentwise

  const PrimitiveState w = to_primitive(u, eos);
  const double g = eos.gamma;
  Mat8 Rw, Lw;
  primitive_eigenvectors(w, g, Rw, Lw, basis.speeds);

  // Dimensionless conditioning in primitive variables, scaled by the fast speed:
  // ||D^-1 Rw||_inf * ||Lw D||_inf with D the natural scale of each primitive component.
  {
    const double c = std::max(basis.speeds[7] - w.v[0], 1e-300);
    const double sr = std::sqrt(w.rho);
    const double d[8] = {w.rho, c, c, c, sr * c, sr * c, sr * c, w.rho * c * c};
    double nr = 0.0, nl = 0.0;
    for (int r = 0; r < 8; ++r) {
      double sr_ = 0.0, sl = 0.0;
      for (int k = 0; k < 8; ++k) {
        sr_ += std::abs(Rw[r * 8 + k]);
        sl += std::abs(Lw[r * 8 + k]) * d[k];
      }
      nr = std::max(nr, sr_ / d[r]);
      nl = std::max(nl, sl);
    }
    basis.condition = nr * nl;
  }

  // R = J Rw and L = Lw G with J = dU/dW, G = dW/dU, written out to skip their zero entries
  const double rho = w.rho, gm1 = g - 1.0;
  const double v2 = w.v[0] * w.v[0] + w.v[1] * w.v[1] + w.v[2] * w.v[2];
  Mat8& R = basis.R;
  Mat8& L = basis.L;
  for (int k = 0; k < 8; ++k) {
    const double r0 = Rw[k];
    R[k] = r0;
    double e = 0.5 * v2 * r0 + Rw[7 * 8 + k] / gm1;
    for (int d = 0; d < 3; ++d) {
      const double rv = Rw[(1 + d) * 8 + k], rb = Rw[(4 + d) * 8 + k];
      R[(1 + d) * 8 + k] = w.v[d] * r0 + rho * rv;
      R[(4 + d) * 8 + k] = rb;
      e += rho * w.v[d] * rv + w.B[d] * rb;
    }
    R[7 * 8 + k] = e;
  }
  for (int r = 0; r < 8; ++r) {
    const double* lw = &Lw[r * 8];
    double* l = &L[r * 8];
    const double l7 = lw[7];
    double c0 = lw[0] + 0.5 * gm1 * v2 * l7;
    for (int d = 0; d < 3; ++d) {
      c0 -= lw[1 + d] * w.v[d] / rho;
      l[1 + d] = lw[1 + d] / rho - gm1 * w.v[d] * l7;
      l[4 + d] = lw[4 + d] - gm1 * w.B[d] * l7;
    }
    l[0] = c0;
    l[7] = gm1 * l7;
  }

  if (axis == Axis::Y) {
    // rows of R and columns of L index physical components
    auto swap_rows = [](Mat8& M, int a, int b) {
      for (int c = 0; c < 8; ++c) std::swap(M[a * 8 + c], M[b * 8 + c]);
    };
    auto swap_cols = [](Mat8& M, int a, int b) {
      for (int r = 0; r < 8; ++r) std::swap(M[r * 8 + a], M[r * 8 + b]);
    };
    swap_rows(basis.R, kMx, kMy);
    swap_rows(basis.R, kBx, kBy);
    swap_cols(basis.L, kMx, kMy);
    swap_cols(basis.L, kBx, kBy);
  }

  // a single non-finite entry makes the sum non-finite (so can overflow, which only costs a fallback)
  double sum = basis.condition;
  for (int k = 0; k < 64; ++k) sum += std::abs(basis.R[k]) + std::abs(basis.L[k]);
  basis.valid = std::isfinite(sum) && basis.condition <= kMaxBasisCondition;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      basis.Rt[c * 8 + r] = basis.R[r * 8 + c];
      basis.Lt[c * 8 + r] = basis.L[r * 8 + c];
    }
  return basis;
}

}  // namespace ddfpp
