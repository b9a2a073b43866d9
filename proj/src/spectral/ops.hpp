#pragma once

#include "core/field.hpp"

namespace rotslab::spectral {

/// Smooth C^2 profile equal to 1 on [0,1], 0 on [2,inf), quintic in between,
/// non-increasing. Shared by the frequency cutoff chi and the gradient-size
/// step b.
double bump_profile(double r);

/// Radial low-pass kernel chi(|k| 2^-M) of level M >= 0. |k| is the physical
/// wavenumber magnitude (equal to the integer mode norm at period 2*pi).
struct CutoffKernel {
    int M = 0;
    explicit CutoffKernel(int level);
    double chi(double r) const { return bump_profile(r); }
};

// Horizontal derivative operators (spectral multiplication by ik; Nyquist
// modes are annihilated). Vector inputs use components (0,1).
Field2D grad_h(const Field2D& f);
Field2D perp_grad_h(const Field2D& f);
Field2D div_h(const Field2D& v);
Field2D curl_h(const Field2D& v);
Field2D laplacian_h(const Field2D& f);

Field3D grad_h(const Field3D& f);
Field3D div_h(const Field3D& v);
Field3D curl_h(const Field3D& v);

/// Vertical derivative, exact on the Chebyshev interpolant.
Field3D deriv_z(const Field3D& f);
/// Full divergence of a 3-component field.
Field3D divergence(const Field3D& v);

/// L^2-orthogonal projection onto divergence-free horizontal fields; the
/// zero mode passes through unchanged.
Field2D leray_project_2d(const Field2D& v);

/// Low-pass S_M[f]: multiplies mode k by chi(|k| 2^-M).
Field2D spectral_cutoff(const Field2D& f, const CutoffKernel& kernel);

/// Pointwise b(M s) for a non-negative scalar field s; M > 0.
Field2D smooth_step_bm(const Field2D& s, double M);

}  // namespace rotslab::spectral
