#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <vector>

#include "core/field.hpp"

namespace rotslab::spectral {

/// Per-horizontal-mode dense collocation solves on the vertical pencil.
/// Factorizations are built once per geometry (or per coefficient set) and
/// immutable afterwards, so instances may be shared across threads.
class ModeLU {
  public:
    ModeLU() = default;
    explicit ModeLU(const Eigen::MatrixXd& m) : lu_(m) {}
    /// Solve in place for an interleaved complex pencil of length n.
    void solve(cplx* pencil, int n) const;

  private:
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// Neumann problem (d33 - kappa^2) q = rhs, d3 q(+-l) = boundary data. The
/// zero mode is singular and carries a zero-mean border (Lagrange multiplier
/// row); the reported free-constant fix is a note, not an error.
class VerticalPoisson {
  public:
    explicit VerticalPoisson(const SlabGeometry& g);

    /// rhs holds interior values; entries 0 and nv-1 are replaced by the
    /// Neumann data (gtop, gbot) internally. Result overwrites rhs.
    void solve(long k2key, cplx* rhs, cplx gtop, cplx gbot) const;

    const SlabGeometry& geom() const { return geom_; }

  private:
    SlabGeometry geom_;
    std::map<long, ModeLU> lus_;
    Eigen::PartialPivLU<Eigen::MatrixXd> zero_lu_;  // bordered (nv+1) system
};

/// Divergence-free projection with impermeable boundaries: w = v - grad q,
/// q solving the per-mode Neumann problem with data d3 q = v3 at x3 = +-l.
class Leray3D {
  public:
    explicit Leray3D(const SlabGeometry& g) : poisson_(g) {}
    Field3D operator()(const Field3D& v) const;

    /// Shared projector for a geometry (cached, immutable).
    static std::shared_ptr<const Leray3D> get(const SlabGeometry& g);

  private:
    VerticalPoisson poisson_;
};

Field3D leray_project_3d(const Field3D& v);

/// Helmholtz operator (a + kappa^2) u - d33 u with boundary rows:
/// tangential components get the slip condition d3 u +- 2 alpha u = 0 at
/// x3 = +-l, the vertical component gets homogeneous Dirichlet rows.
class VerticalHelmholtz {
  public:
    VerticalHelmholtz(const SlabGeometry& g, double a, double alpha);

    double a() const { return a_; }
    double alpha() const { return alpha_; }

    /// In-place solve for one pencil; boundary entries of rhs are overwritten
    /// with the (homogeneous) boundary data.
    void solve_tangential(long k2key, cplx* rhs) const;
    void solve_vertical(long k2key, cplx* rhs) const;

  private:
    SlabGeometry geom_;
    double a_ = 0.0;
    double alpha_ = 0.0;
    std::map<long, ModeLU> tan_, ver_;
};

/// Integer mode key m1^2 + m2^2 for FFT indices (i, j).
long mode_key(const SlabGeometry& g, int i, int j);
/// Physical kappa^2 for a key.
double kappa2_of_key(const SlabGeometry& g, long key);

}  // namespace rotslab::spectral
