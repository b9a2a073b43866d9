#include "core/field.hpp"

#include <algorithm>
#include <cmath>

#include "core/chebyshev.hpp"
#include "core/fft.hpp"

namespace rotslab {

void require_same_grid(const SlabGeometry& a, const SlabGeometry& b) {
    if (!a.same_grid(b)) throw GeometryError("fields live on different grids");
}

// ---------------------------------------------------------------------------
// Field2D

Field2D::Field2D(const SlabGeometry& g, int ncomp, Repr initial) : geom_(g), ncomp_(ncomp) {
    const size_t n = static_cast<size_t>(ncomp) * cells();
    phys_.assign(n, 0.0);
    spec_.assign(n, cplx{0.0, 0.0});
    phys_ok_ = initial == Repr::Physical;
    spec_ok_ = initial == Repr::Spectral;
}

void Field2D::ensure_spectral() const {
    if (spec_ok_) return;
    const long nc = cells();
    for (int c = 0; c < ncomp_; ++c) {
        cplx* s = spec_.data() + static_cast<size_t>(c) * nc;
        const double* p = phys_.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) s[q] = cplx{p[q], 0.0};
        fft::forward2d(s, geom_.nh, 1);
    }
    spec_ok_ = true;
}

void Field2D::ensure_physical() const {
    if (phys_ok_) return;
    const long nc = cells();
    std::vector<cplx> work(nc);
    for (int c = 0; c < ncomp_; ++c) {
        std::copy_n(spec_.data() + static_cast<size_t>(c) * nc, nc, work.data());
        fft::inverse2d(work.data(), geom_.nh, 1);
        double* p = phys_.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) p[q] = work[q].real();
    }
    phys_ok_ = true;
}

std::span<const double> Field2D::physical() const& {
    ensure_physical();
    return {phys_.data(), phys_.size()};
}

std::span<double> Field2D::physical_mut() & {
    ensure_physical();
    spec_ok_ = false;
    return {phys_.data(), phys_.size()};
}

std::span<const cplx> Field2D::spectral() const& {
    ensure_spectral();
    return {spec_.data(), spec_.size()};
}

std::span<cplx> Field2D::spectral_mut() & {
    ensure_spectral();
    phys_ok_ = false;
    return {spec_.data(), spec_.size()};
}

void Field2D::fill(const std::function<double(int, double, double)>& f) {
    auto p = physical_mut();
    const double dx = geom_.dx();
    for (int c = 0; c < ncomp_; ++c)
        for (int i = 0; i < geom_.nh; ++i)
            for (int j = 0; j < geom_.nh; ++j) p[idx(c, i, j)] = f(c, i * dx, j * dx);
}

// ---------------------------------------------------------------------------
// Field3D

Field3D::Field3D(const SlabGeometry& g, int ncomp, Repr initial) : geom_(g), ncomp_(ncomp) {
    const size_t n = static_cast<size_t>(ncomp) * cells();
    phys_.assign(n, 0.0);
    spec_.assign(n, cplx{0.0, 0.0});
    phys_ok_ = initial == Repr::Physical;
    spec_ok_ = initial == Repr::Spectral;
}

void Field3D::ensure_spectral() const {
    if (spec_ok_) return;
    const auto& basis = cheb::Basis::get(geom_.nv);
    const long nc = cells();
    const long npencils = static_cast<long>(geom_.nh) * geom_.nh;
    std::vector<cplx> work(nc);
    for (int c = 0; c < ncomp_; ++c) {
        const double* p = phys_.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) work[q] = cplx{p[q], 0.0};
        fft::forward2d(work.data(), geom_.nh, geom_.nv);
        cheb::apply_pencil_matrix(basis.vals_to_coeffs.data(), geom_.nv, geom_.nv,
                                  reinterpret_cast<const double*>(work.data()),
                                  reinterpret_cast<double*>(spec_.data() + static_cast<size_t>(c) * nc),
                                  npencils, 2);
    }
    spec_ok_ = true;
}

void Field3D::ensure_physical() const {
    if (phys_ok_) return;
    const auto& basis = cheb::Basis::get(geom_.nv);
    const long nc = cells();
    const long npencils = static_cast<long>(geom_.nh) * geom_.nh;
    std::vector<cplx> work(nc);
    for (int c = 0; c < ncomp_; ++c) {
        cheb::apply_pencil_matrix(basis.coeffs_to_vals.data(), geom_.nv, geom_.nv,
                                  reinterpret_cast<const double*>(spec_.data() + static_cast<size_t>(c) * nc),
                                  reinterpret_cast<double*>(work.data()), npencils, 2);
        fft::inverse2d(work.data(), geom_.nh, geom_.nv);
        double* p = phys_.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) p[q] = work[q].real();
    }
    phys_ok_ = true;
}

std::span<const double> Field3D::physical() const& {
    ensure_physical();
    return {phys_.data(), phys_.size()};
}

std::span<double> Field3D::physical_mut() & {
    ensure_physical();
    spec_ok_ = false;
    return {phys_.data(), phys_.size()};
}

std::span<const cplx> Field3D::spectral() const& {
    ensure_spectral();
    return {spec_.data(), spec_.size()};
}

std::span<cplx> Field3D::spectral_mut() & {
    ensure_spectral();
    phys_ok_ = false;
    return {spec_.data(), spec_.size()};
}

void Field3D::fill(const std::function<double(int, double, double, double)>& f) {
    auto p = physical_mut();
    const double dx = geom_.dx();
    for (int c = 0; c < ncomp_; ++c)
        for (int i = 0; i < geom_.nh; ++i)
            for (int j = 0; j < geom_.nh; ++j)
                for (int k = 0; k < geom_.nv; ++k)
                    p[idx(c, i, j, k)] = f(c, i * dx, j * dx, geom_.znode(k));
}

// ---------------------------------------------------------------------------
// hspec helpers

std::vector<cplx> to_hspec(const Field3D& f) {
    const auto p = f.physical();
    std::vector<cplx> out(p.size());
    const long nc = f.cells();
    for (int c = 0; c < f.ncomp(); ++c) {
        cplx* dst = out.data() + static_cast<size_t>(c) * nc;
        const double* src = p.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) dst[q] = cplx{src[q], 0.0};
        fft::forward2d(dst, f.geom().nh, f.geom().nv);
    }
    return out;
}

Field3D from_hspec(const SlabGeometry& g, int ncomp, const std::vector<cplx>& data) {
    Field3D f(g, ncomp);
    auto p = f.physical_mut();
    const long nc = f.cells();
    std::vector<cplx> work(nc);
    for (int c = 0; c < ncomp; ++c) {
        std::copy_n(data.data() + static_cast<size_t>(c) * nc, nc, work.data());
        fft::inverse2d(work.data(), g.nh, g.nv);
        double* dst = p.data() + static_cast<size_t>(c) * nc;
        for (long q = 0; q < nc; ++q) dst[q] = work[q].real();
    }
    return f;
}

// ---------------------------------------------------------------------------
// Averages, traces, quadrature

Field2D vertical_average(const Field3D& f) {
    const auto& g = f.geom();
    const auto& w = cheb::Basis::get(g.nv).weights;
    const auto p = f.physical();
    Field2D out(g, f.ncomp());
    auto o = out.physical_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) {
                const double* pencil = p.data() + f.idx(c, i, j, 0);
                double acc = 0.0;
                for (int k = 0; k < g.nv; ++k) acc += w[k] * pencil[k];
                o[out.idx(c, i, j)] = 0.5 * acc;  // weights sum to 2
            }
    return out;
}

Field2D boundary_trace(const Field3D& f, Side side) {
    const auto& g = f.geom();
    const int k = side == Side::Top ? 0 : g.nv - 1;
    const auto p = f.physical();
    Field2D out(g, f.ncomp());
    auto o = out.physical_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) o[out.idx(c, i, j)] = p[f.idx(c, i, j, k)];
    return out;
}

double avg_l2norm2(const Field3D& f) {
    const auto& g = f.geom();
    const auto& w = cheb::Basis::get(g.nv).weights;
    const auto p = f.physical();
    const double da = g.dx() * g.dx();
    double acc = 0.0;
    for (int c = 0; c < f.ncomp(); ++c)
        for (int i = 0; i < g.nh; ++i)
            for (int j = 0; j < g.nh; ++j) {
                const double* pencil = p.data() + f.idx(c, i, j, 0);
                for (int k = 0; k < g.nv; ++k) acc += w[k] * pencil[k] * pencil[k];
            }
    return 0.5 * acc * da;
}

double avg_l2inner(const Field3D& a, const Field3D& b) {
    require_same_grid(a.geom(), b.geom());
    if (a.ncomp() != b.ncomp()) throw GeometryError("component count mismatch");
    const auto& g = a.geom();
    const auto& w = cheb::Basis::get(g.nv).weights;
    const auto pa = a.physical();
    const auto pb = b.physical();
    const double da = g.dx() * g.dx();
    double acc = 0.0;
    for (size_t q = 0; q < pa.size(); ++q) acc += w[q % g.nv] * pa[q] * pb[q];
    return 0.5 * acc * da;
}

double l2norm2_h(const Field2D& f) {
    const auto p = f.physical();
    const double da = f.geom().dx() * f.geom().dx();
    double acc = 0.0;
    for (double v : p) acc += v * v;
    return acc * da;
}

double l2inner_h(const Field2D& a, const Field2D& b) {
    require_same_grid(a.geom(), b.geom());
    if (a.ncomp() != b.ncomp()) throw GeometryError("component count mismatch");
    const auto pa = a.physical();
    const auto pb = b.physical();
    const double da = a.geom().dx() * a.geom().dx();
    double acc = 0.0;
    for (size_t q = 0; q < pa.size(); ++q) acc += pa[q] * pb[q];
    return acc * da;
}

double integral_h(const Field2D& f, int c) {
    const auto p = f.physical();
    const double da = f.geom().dx() * f.geom().dx();
    const long nc = f.cells();
    double acc = 0.0;
    for (long q = 0; q < nc; ++q) acc += p[static_cast<size_t>(c) * nc + q];
    return acc * da;
}

double integral3(const Field3D& f, int c) {
    const auto& g = f.geom();
    const auto& w = cheb::Basis::get(g.nv).weights;
    const auto p = f.physical();
    const long nc = f.cells();
    const double* base = p.data() + static_cast<size_t>(c) * nc;
    double acc = 0.0;
    for (long q = 0; q < nc; ++q) acc += w[q % g.nv] * base[q];
    return acc * g.ell * g.dx() * g.dx();
}

double max_abs(const Field3D& f) {
    double m = 0.0;
    for (double v : f.physical()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const Field2D& f) {
    double m = 0.0;
    for (double v : f.physical()) m = std::max(m, std::abs(v));
    return m;
}

double min_value(const Field3D& f, int c) {
    const auto p = f.physical();
    const long nc = f.cells();
    double m = p[static_cast<size_t>(c) * nc];
    for (long q = 0; q < nc; ++q) m = std::min(m, p[static_cast<size_t>(c) * nc + q]);
    return m;
}

double max_value(const Field3D& f, int c) {
    const auto p = f.physical();
    const long nc = f.cells();
    double m = p[static_cast<size_t>(c) * nc];
    for (long q = 0; q < nc; ++q) m = std::max(m, p[static_cast<size_t>(c) * nc + q]);
    return m;
}

double hermitian_defect(const Field2D& f) {
    const auto s = f.spectral();
    const int nh = f.geom().nh;
    double m = 0.0;
    for (int c = 0; c < f.ncomp(); ++c)
        for (int i = 0; i < nh; ++i)
            for (int j = 0; j < nh; ++j) {
                const int in = (nh - i) % nh;
                const int jn = (nh - j) % nh;
                const cplx d = s[f.idx(c, i, j)] - std::conj(s[f.idx(c, in, jn)]);
                m = std::max(m, std::abs(d));
            }
    return m;
}

}  // namespace rotslab
