#include "spectral/dealias.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "core/chebyshev.hpp"
#include "core/fft.hpp"

namespace rotslab::spectral {

namespace {

void truncate_hspec(cplx* s, const SlabGeometry& g, int batch, int keep) {
    for (int i = 0; i < g.nh; ++i)
        for (int j = 0; j < g.nh; ++j) {
            const int m1 = std::abs(g.mode(i)), m2 = std::abs(g.mode(j));
            if (m1 <= keep && m2 <= keep) continue;
            cplx* p = s + (static_cast<size_t>(i) * g.nh + j) * batch;
            for (int b = 0; b < batch; ++b) p[b] = 0.0;
        }
}

template <class K, class V>
std::shared_ptr<const V> shared_instance(const K& key, const SlabGeometry& g) {
    static std::mutex mtx;
    static std::map<K, std::shared_ptr<const V>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<V>(g)).first;
    return it->second;
}

}  // namespace

Dealiaser::Dealiaser(const SlabGeometry& g) : geom_(g) {
    keep_ = g.nh / 3;
    nvp_ = (3 * g.nv) / 2;
    if (nvp_ % 2 == 0) ++nvp_;  // keep the node count odd

    const auto& fine = cheb::Basis::get(nvp_);
    const double pi = 3.14159265358979323846;

    // Zero-padded evaluation: T_m(z^fine_j) for m < nv.
    coeffs_to_pad_.assign(static_cast<size_t>(nvp_) * g.nv, 0.0);
    for (int j = 0; j < nvp_; ++j)
        for (int m = 0; m < g.nv; ++m)
            coeffs_to_pad_[static_cast<size_t>(j) * g.nv + m] = std::cos(pi * m * j / (nvp_ - 1));

    // Fine-grid analysis followed by coefficient truncation.
    pad_to_coeffs_.assign(static_cast<size_t>(g.nv) * nvp_, 0.0);
    for (int m = 0; m < g.nv; ++m)
        for (int j = 0; j < nvp_; ++j)
            pad_to_coeffs_[static_cast<size_t>(m) * nvp_ + j] =
                fine.vals_to_coeffs[static_cast<size_t>(m) * nvp_ + j];
}

std::vector<double> Dealiaser::prepare(const Field3D& f, int comp) const {
    const int nh = geom_.nh, nv = geom_.nv;
    const long nc = f.cells();
    const long npencils = static_cast<long>(nh) * nh;

    // Horizontal spectrum at the nodes for the requested component.
    std::vector<cplx> hs(nc);
    {
        const auto p = f.physical();
        const double* src = p.data() + static_cast<size_t>(comp) * nc;
        for (long q = 0; q < nc; ++q) hs[q] = cplx{src[q], 0.0};
        fft::forward2d(hs.data(), nh, nv);
    }
    truncate_hspec(hs.data(), geom_, nv, keep_);

    // Vertical coefficients, zero-padded evaluation on the fine grid.
    std::vector<cplx> coeffs(nc);
    const auto& basis = cheb::Basis::get(nv);
    cheb::apply_pencil_matrix(basis.vals_to_coeffs.data(), nv, nv,
                              reinterpret_cast<const double*>(hs.data()),
                              reinterpret_cast<double*>(coeffs.data()), npencils, 2);
    std::vector<cplx> fine(npencils * nvp_);
    cheb::apply_pencil_matrix(coeffs_to_pad_.data(), nvp_, nv,
                              reinterpret_cast<const double*>(coeffs.data()),
                              reinterpret_cast<double*>(fine.data()), npencils, 2);
    fft::inverse2d(fine.data(), nh, nvp_);

    std::vector<double> out(npencils * nvp_);
    for (size_t q = 0; q < out.size(); ++q) out[q] = fine[q].real();
    return out;
}

Field3D Dealiaser::project_back(std::vector<double> padded) const {
    const int nh = geom_.nh, nv = geom_.nv;
    const long npencils = static_cast<long>(nh) * nh;

    std::vector<cplx> fine(padded.size());
    for (size_t q = 0; q < padded.size(); ++q) fine[q] = cplx{padded[q], 0.0};
    fft::forward2d(fine.data(), nh, nvp_);
    truncate_hspec(fine.data(), geom_, nvp_, keep_);

    Field3D out(geom_, 1, Repr::Spectral);
    cheb::apply_pencil_matrix(pad_to_coeffs_.data(), nv, nvp_,
                              reinterpret_cast<const double*>(fine.data()),
                              reinterpret_cast<double*>(out.spectral_mut().data()), npencils, 2);
    return out;
}

Field3D Dealiaser::combine(const std::vector<double>& a, const std::vector<double>& b) const {
    std::vector<double> prod(a.size());
    for (size_t q = 0; q < a.size(); ++q) prod[q] = a[q] * b[q];
    return project_back(std::move(prod));
}

Field3D Dealiaser::combine3(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& c) const {
    std::vector<double> prod(a.size());
    for (size_t q = 0; q < a.size(); ++q) prod[q] = a[q] * b[q] * c[q];
    return project_back(std::move(prod));
}

Field3D Dealiaser::product(const Field3D& a, int ca, const Field3D& b, int cb) const {
    return combine(prepare(a, ca), prepare(b, cb));
}

void Dealiaser::truncate(Field3D& f) const {
    auto s = f.spectral_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        truncate_hspec(s.data() + static_cast<size_t>(c) * f.cells(), geom_, geom_.nv, keep_);
}

void Dealiaser::truncate(Field2D& f) const {
    auto s = f.spectral_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        truncate_hspec(s.data() + static_cast<size_t>(c) * f.cells(), geom_, 1, keep_);
}

std::shared_ptr<const Dealiaser> Dealiaser::get(const SlabGeometry& g) {
    using Key = std::tuple<int, int, double, double>;
    return shared_instance<Key, Dealiaser>(Key{g.nh, g.nv, g.period, g.ell}, g);
}

Dealiaser2D::Dealiaser2D(const SlabGeometry& g) : geom_(g) { keep_ = g.nh / 3; }

Field2D Dealiaser2D::product(const Field2D& a, int ca, const Field2D& b, int cb) const {
    const int nh = geom_.nh;
    const long nc = static_cast<long>(nh) * nh;

    auto limited = [&](const Field2D& f, int comp) {
        std::vector<cplx> hs(nc);
        const auto s = f.spectral();
        std::copy_n(s.data() + static_cast<size_t>(comp) * nc, nc, hs.data());
        truncate_hspec(hs.data(), geom_, 1, keep_);
        fft::inverse2d(hs.data(), nh, 1);
        return hs;
    };
    std::vector<cplx> pa = limited(a, ca), pb = limited(b, cb);
    std::vector<cplx> prod(nc);
    for (long q = 0; q < nc; ++q) prod[q] = cplx{pa[q].real() * pb[q].real(), 0.0};
    fft::forward2d(prod.data(), nh, 1);
    truncate_hspec(prod.data(), geom_, 1, keep_);

    Field2D out(a.geom(), 1, Repr::Spectral);
    std::copy_n(prod.data(), nc, out.spectral_mut().data());
    return out;
}

void Dealiaser2D::truncate(Field2D& f) const {
    auto s = f.spectral_mut();
    for (int c = 0; c < f.ncomp(); ++c)
        truncate_hspec(s.data() + static_cast<size_t>(c) * f.cells(), geom_, 1, keep_);
}

std::shared_ptr<const Dealiaser2D> Dealiaser2D::get(const SlabGeometry& g) {
    using Key = std::tuple<int, double>;
    return shared_instance<Key, Dealiaser2D>(Key{g.nh, g.period}, g);
}

}  // namespace rotslab::spectral
