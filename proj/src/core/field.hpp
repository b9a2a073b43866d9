#pragma once

#include <functional>
#include <span>
#include <vector>

#include "common.hpp"
#include "core/slab.hpp"

namespace rotslab {

enum class Repr { Physical, Spectral };

enum class Side { Top, Bottom };

/// Scalar or vector field on the horizontal torus. Physical values live on
/// the uniform grid; the spectral representation holds complex Fourier
/// coefficients (mode layout matching FFT indices). Either representation is
/// materialized lazily from the other; mutating accessors invalidate the
/// counterpart. Lazy materialization makes first const access non-reentrant:
/// share fields across threads only after both representations exist, or copy.
class Field2D {
  public:
    Field2D() = default;
    Field2D(const SlabGeometry& g, int ncomp, Repr initial = Repr::Physical);

    const SlabGeometry& geom() const { return geom_; }
    int ncomp() const { return ncomp_; }
    long cells() const { return static_cast<long>(geom_.nh) * geom_.nh; }

    size_t idx(int c, int i, int j) const { return (static_cast<size_t>(c) * geom_.nh + i) * geom_.nh + j; }

    // Spans point into the field; calling these on temporaries is rejected.
    std::span<const double> physical() const&;
    std::span<double> physical_mut() &;
    std::span<const cplx> spectral() const&;
    std::span<cplx> spectral_mut() &;
    std::span<const double> physical() const&& = delete;
    std::span<const cplx> spectral() const&& = delete;

    bool physical_current() const { return phys_ok_; }
    bool spectral_current() const { return spec_ok_; }

    /// Fill physical values from f(c, x1, x2).
    void fill(const std::function<double(int, double, double)>& f);

  private:
    void ensure_physical() const;
    void ensure_spectral() const;

    SlabGeometry geom_;
    int ncomp_ = 0;
    mutable std::vector<double> phys_;
    mutable std::vector<cplx> spec_;
    mutable bool phys_ok_ = false;
    mutable bool spec_ok_ = false;
};

/// Field on the slab. Physical values are nodal on the (nh, nh, nv) grid with
/// the vertical index fastest; the spectral representation is horizontal
/// Fourier coefficients times vertical Chebyshev coefficients.
class Field3D {
  public:
    Field3D() = default;
    Field3D(const SlabGeometry& g, int ncomp, Repr initial = Repr::Physical);

    const SlabGeometry& geom() const { return geom_; }
    int ncomp() const { return ncomp_; }
    long cells() const { return static_cast<long>(geom_.nh) * geom_.nh * geom_.nv; }

    size_t idx(int c, int i, int j, int k) const {
        return ((static_cast<size_t>(c) * geom_.nh + i) * geom_.nh + j) * geom_.nv + k;
    }

    std::span<const double> physical() const&;
    std::span<double> physical_mut() &;
    std::span<const cplx> spectral() const&;
    std::span<cplx> spectral_mut() &;
    std::span<const double> physical() const&& = delete;
    std::span<const cplx> spectral() const&& = delete;

    bool physical_current() const { return phys_ok_; }
    bool spectral_current() const { return spec_ok_; }

    /// Fill physical values from f(c, x1, x2, x3).
    void fill(const std::function<double(int, double, double, double)>& f);

  private:
    void ensure_physical() const;
    void ensure_spectral() const;

    SlabGeometry geom_;
    int ncomp_ = 0;
    mutable std::vector<double> phys_;
    mutable std::vector<cplx> spec_;
    mutable bool phys_ok_ = false;
    mutable bool spec_ok_ = false;
};

void require_same_grid(const SlabGeometry& a, const SlabGeometry& b);

/// Horizontal Fourier coefficients evaluated at the vertical nodes (layout
/// (c,i,j,k), k = z node). This is the working representation for per-mode
/// vertical solves; it is not stored on the field.
std::vector<cplx> to_hspec(const Field3D& f);
Field3D from_hspec(const SlabGeometry& g, int ncomp, const std::vector<cplx>& data);

/// Vertical average fbar(x_h) = (1/2l) int f dx3, exact for the vertical basis.
Field2D vertical_average(const Field3D& f);

/// Boundary slice f(.,.,+l) or f(.,.,-l).
Field2D boundary_trace(const Field3D& f, Side side);

/// Quadrature: (1/2l) * int_slab |f|^2 dx (all components). The "average of
/// the norm" pairing used throughout the diagnostics.
double avg_l2norm2(const Field3D& f);
/// int_T2 |f|^2 dx_h (all components).
double l2norm2_h(const Field2D& f);
/// int_T2 f dx_h for one component.
double integral_h(const Field2D& f, int c = 0);
/// Full-slab integral of one component, int_slab f dx.
double integral3(const Field3D& f, int c = 0);
/// (1/2l) * int_slab a.b dx, components paired.
double avg_l2inner(const Field3D& a, const Field3D& b);
/// int_T2 a.b dx_h.
double l2inner_h(const Field2D& a, const Field2D& b);

double max_abs(const Field3D& f);
double max_abs(const Field2D& f);
double min_value(const Field3D& f, int c = 0);
double max_value(const Field3D& f, int c = 0);

/// Largest |spec(k) - conj(spec(-k))| over modes; zero for real data.
double hermitian_defect(const Field2D& f);

}  // namespace rotslab
