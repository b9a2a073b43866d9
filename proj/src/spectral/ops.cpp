#include "spectral/ops.hpp"

#include <cmath>

namespace rotslab::spectral {

double bump_profile(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double s = r - 1.0;
    return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

CutoffKernel::CutoffKernel(int level) : M(level) {
    if (level < 0) throw ParamError("cutoff level M must be non-negative");
}

namespace {

// kder(i) is the derivative wavenumber for FFT index i, with the Nyquist mode
// dropped so derivatives of real fields stay real.
double kder(const SlabGeometry& g, int i) {
    if (g.nh % 2 == 0 && i == g.nh / 2) return 0.0;
    return g.wavenumber(i);
}

template <class FieldT, class Fn>
FieldT map_modes(const FieldT& in, int ncomp_out, Fn&& fn) {
    FieldT out(in.geom(), ncomp_out, Repr::Spectral);
    fn(in.spectral(), out.spectral_mut());
    return out;
}

}  // namespace

Field2D grad_h(const Field2D& f) {
    if (f.ncomp() != 1) throw GeometryError("grad_h expects a scalar field");
    const auto& g = f.geom();
    return map_modes(f, 2, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) {
                const cplx v = s[f.idx(0, i, j)];
                o[f.idx(0, i, j)] = cplx{0, kder(g, i)} * v;
                o[f.idx(1, i, j)] = cplx{0, kder(g, j)} * v;
            }
    });
}

Field2D perp_grad_h(const Field2D& f) {
    if (f.ncomp() != 1) throw GeometryError("perp_grad_h expects a scalar field");
    const auto& g = f.geom();
    return map_modes(f, 2, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) {
                const cplx v = s[f.idx(0, i, j)];
                o[f.idx(0, i, j)] = -cplx{0, kder(g, j)} * v;
                o[f.idx(1, i, j)] = cplx{0, kder(g, i)} * v;
            }
    });
}

Field2D div_h(const Field2D& v) {
    if (v.ncomp() < 2) throw GeometryError("div_h expects a horizontal vector field");
    const auto& g = v.geom();
    return map_modes(v, 1, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j)
                o[(static_cast<size_t>(i)) * g.nh + j] =
                    cplx{0, kder(g, i)} * s[v.idx(0, i, j)] + cplx{0, kder(g, j)} * s[v.idx(1, i, j)];
    });
}

Field2D curl_h(const Field2D& v) {
    if (v.ncomp() < 2) throw GeometryError("curl_h expects a horizontal vector field");
    const auto& g = v.geom();
    return map_modes(v, 1, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j)
                o[(static_cast<size_t>(i)) * g.nh + j] =
                    cplx{0, kder(g, i)} * s[v.idx(1, i, j)] - cplx{0, kder(g, j)} * s[v.idx(0, i, j)];
    });
}

Field2D laplacian_h(const Field2D& f) {
    const auto& g = f.geom();
    return map_modes(f, f.ncomp(), [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int c = 0; c < f.ncomp(); ++c)
            for (int i = 0; i < g.nh; ++i)
                for (int j = 0; j < g.nh; ++j) {
                    const double k1 = g.wavenumber(i), k2 = g.wavenumber(j);
                    o[f.idx(c, i, j)] = -(k1 * k1 + k2 * k2) * s[f.idx(c, i, j)];
                }
    });
}

Field3D grad_h(const Field3D& f) {
    if (f.ncomp() != 1) throw GeometryError("grad_h expects a scalar field");
    const auto& g = f.geom();
    return map_modes(f, 2, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j)
                for (int k = 0; k < g.nv; ++k) {
                    const cplx v = s[f.idx(0, i, j, k)];
                    o[f.idx(0, i, j, k)] = cplx{0, kder(g, i)} * v;
                    o[f.idx(1, i, j, k)] = cplx{0, kder(g, j)} * v;
                }
    });
}

Field3D div_h(const Field3D& v) {
    if (v.ncomp() < 2) throw GeometryError("div_h expects a vector field");
    const auto& g = v.geom();
    return map_modes(v, 1, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j)
                for (int k = 0; k < g.nv; ++k)
                    o[v.idx(0, i, j, k)] = cplx{0, kder(g, i)} * s[v.idx(0, i, j, k)] +
                                           cplx{0, kder(g, j)} * s[v.idx(1, i, j, k)];
    });
}

Field3D curl_h(const Field3D& v) {
    if (v.ncomp() < 2) throw GeometryError("curl_h expects a vector field");
    const auto& g = v.geom();
    return map_modes(v, 1, [&](std::span<const cplx> s, std::span<cplx> o) {
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j)
                for (int k = 0; k < g.nv; ++k)
                    o[v.idx(0, i, j, k)] = cplx{0, kder(g, i)} * s[v.idx(1, i, j, k)] -
                                           cplx{0, kder(g, j)} * s[v.idx(0, i, j, k)];
    });
}

Field3D deriv_z(const Field3D& f) {
    const auto& g = f.geom();
    Field3D out(g, f.ncomp(), Repr::Spectral);
    const auto s = f.spectral();
    auto o = out.spectral_mut();
    const int nv = g.nv;
    const double scale = 1.0 / g.ell;
    const long npencils = static_cast<long>(f.ncomp()) * g.nh * g.nh;
    // Chebyshev coefficient recurrence: b_{k-1} = b_{k+1} + 2k a_k, b_0 halved.
    for (long p = 0; p < npencils; ++p) {
        const cplx* a = s.data() + p * nv;
        cplx* b = o.data() + p * nv;
        b[nv - 1] = 0.0;
        b[nv - 2] = 2.0 * (nv - 1) * a[nv - 1];
        for (int k = nv - 2; k >= 1; --k) b[k - 1] = b[k + 1] + 2.0 * k * a[k];
        b[0] *= 0.5;
        for (int k = 0; k < nv; ++k) b[k] *= scale;
    }
    return out;
}

Field3D divergence(const Field3D& v) {
    if (v.ncomp() != 3) throw GeometryError("divergence expects a 3-component field");
    Field3D dh = div_h(v);
    Field3D dz = deriv_z(v);
    Field3D out(v.geom(), 1, Repr::Spectral);
    auto o = out.spectral_mut();
    const auto a = dh.spectral();
    const auto b = dz.spectral();
    const long nc = v.cells();
    for (long q = 0; q < nc; ++q) o[q] = a[q] + b[static_cast<size_t>(2) * nc + q];
    return out;
}

Field2D leray_project_2d(const Field2D& v) {
    if (v.ncomp() != 2) throw GeometryError("leray_project_2d expects a 2-component field");
    const auto& g = v.geom();
    Field2D out = v;
    auto s = out.spectral_mut();
    for (int i = 0; i < g.nh; ++i)
        for (int j = 0; j < g.nh; ++j) {
            const double k1 = kder(g, i), k2 = kder(g, j);
            const double k2n = k1 * k1 + k2 * k2;
            if (k2n == 0.0) continue;  // zero mode (and Nyquist lines) pass through
            const cplx dot = k1 * s[v.idx(0, i, j)] + k2 * s[v.idx(1, i, j)];
            s[v.idx(0, i, j)] -= k1 / k2n * dot;
            s[v.idx(1, i, j)] -= k2 / k2n * dot;
        }
    return out;
}

Field2D spectral_cutoff(const Field2D& f, const CutoffKernel& kernel) {
    const auto& g = f.geom();
    const double scale = std::pow(2.0, -kernel.M);
    Field2D out = f;
    auto s = out.spectral_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) {
                const double k1 = g.wavenumber(i), k2 = g.wavenumber(j);
                s[f.idx(c, i, j)] *= kernel.chi(scale * std::sqrt(k1 * k1 + k2 * k2));
            }
    return out;
}

Field2D smooth_step_bm(const Field2D& s, double M) {
    if (!(M > 0.0)) throw ParamError("smooth step level M must be positive");
    Field2D out = s;
    for (double& v : out.physical_mut()) v = bump_profile(M * v);
    return out;
}

}  // namespace rotslab::spectral
