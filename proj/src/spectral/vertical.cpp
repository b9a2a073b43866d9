#include "spectral/vertical.hpp"

#include <mutex>
#include <set>
#include <tuple>

#include "core/chebyshev.hpp"

namespace rotslab::spectral {

namespace {

// Scaled vertical derivative matrices for the slab [-l, l].
Eigen::MatrixXd deriv1(const SlabGeometry& g) {
    const auto& b = cheb::Basis::get(g.nv);
    Eigen::MatrixXd d(g.nv, g.nv);
    for (int i = 0; i < g.nv; ++i)
        for (int j = 0; j < g.nv; ++j) d(i, j) = b.deriv[i * g.nv + j] / g.ell;
    return d;
}

std::set<long> all_mode_keys(const SlabGeometry& g) {
    std::set<long> keys;
    for (int i = 0; i < g.nh; ++i)
        for (int j = 0; j < g.nh; ++j) keys.insert(mode_key(g, i, j));
    return keys;
}

}  // namespace

long mode_key(const SlabGeometry& g, int i, int j) {
    const long m1 = g.mode(i), m2 = g.mode(j);
    return m1 * m1 + m2 * m2;
}

double kappa2_of_key(const SlabGeometry& g, long key) {
    const double f = 2.0 * 3.14159265358979323846 / g.period;
    return f * f * static_cast<double>(key);
}

void ModeLU::solve(cplx* pencil, int n) const {
    Eigen::VectorXd re(n), im(n);
    for (int q = 0; q < n; ++q) {
        re(q) = pencil[q].real();
        im(q) = pencil[q].imag();
    }
    Eigen::VectorXd sre = lu_.solve(re);
    Eigen::VectorXd sim = lu_.solve(im);
    for (int q = 0; q < n; ++q) pencil[q] = cplx{sre(q), sim(q)};
}

VerticalPoisson::VerticalPoisson(const SlabGeometry& g) : geom_(g) {
    const int nv = g.nv;
    const Eigen::MatrixXd d1 = deriv1(g);
    const Eigen::MatrixXd d2 = d1 * d1;
    const auto& basis = cheb::Basis::get(nv);

    for (long key : all_mode_keys(g)) {
        Eigen::MatrixXd m = d2;
        m.diagonal().array() -= kappa2_of_key(g, key);
        m.row(0) = d1.row(0);
        m.row(nv - 1) = d1.row(nv - 1);
        if (key == 0) {
            // Bordered system: interior rows get a multiplier column, and the
            // quadrature mean-zero constraint closes the system.
            Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(nv + 1, nv + 1);
            bm.topLeftCorner(nv, nv) = m;
            for (int r = 1; r < nv - 1; ++r) bm(r, nv) = 1.0;
            for (int c = 0; c < nv; ++c) bm(nv, c) = basis.weights[c];
            zero_lu_ = Eigen::PartialPivLU<Eigen::MatrixXd>(bm);
        } else {
            lus_.emplace(key, ModeLU(m));
        }
    }
}

void VerticalPoisson::solve(long k2key, cplx* rhs, cplx gtop, cplx gbot) const {
    const int nv = geom_.nv;
    rhs[0] = gtop;
    rhs[nv - 1] = gbot;
    if (k2key == 0) {
        Eigen::VectorXd re = Eigen::VectorXd::Zero(nv + 1), im = Eigen::VectorXd::Zero(nv + 1);
        for (int q = 0; q < nv; ++q) {
            re(q) = rhs[q].real();
            im(q) = rhs[q].imag();
        }
        Eigen::VectorXd sre = zero_lu_.solve(re);
        Eigen::VectorXd sim = zero_lu_.solve(im);
        for (int q = 0; q < nv; ++q) rhs[q] = cplx{sre(q), sim(q)};
        return;
    }
    lus_.at(k2key).solve(rhs, nv);
}

Field3D Leray3D::operator()(const Field3D& v) const {
    if (v.ncomp() != 3) throw GeometryError("projection expects a 3-component field");
    const SlabGeometry& g = poisson_.geom();
    require_same_grid(g, v.geom());
    const int nh = g.nh, nv = g.nv;
    const auto& basis = cheb::Basis::get(nv);

    std::vector<cplx> hs = to_hspec(v);
    const long nc = v.cells();

    // div v at the vertical nodes: ik.v_h + D v3.
    std::vector<cplx> div(nc);
    std::vector<cplx> dv3(nc);
    cheb::apply_pencil_matrix(basis.deriv.data(), nv, nv,
                              reinterpret_cast<const double*>(hs.data() + 2 * nc),
                              reinterpret_cast<double*>(dv3.data()), static_cast<long>(nh) * nh, 2);
    std::vector<cplx> q(nv);
    std::vector<double> dq_re(nv), dq_im(nv);

    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) {
            const bool nyq = (i == nh / 2) || (j == nh / 2);
            if (nyq) continue;  // Nyquist modes pass through untouched
            const double k1 = g.wavenumber(i), k2 = g.wavenumber(j);
            const size_t base = (static_cast<size_t>(i) * nh + j) * nv;
            for (int k = 0; k < nv; ++k)
                q[k] = cplx{0, k1} * hs[base + k] + cplx{0, k2} * hs[nc + base + k] +
                       dv3[base + k] / g.ell;
            poisson_.solve(mode_key(g, i, j), q.data(), hs[2 * nc + base], hs[2 * nc + base + nv - 1]);

            // w = v - grad q
            for (int k = 0; k < nv; ++k) {
                hs[base + k] -= cplx{0, k1} * q[k];
                hs[nc + base + k] -= cplx{0, k2} * q[k];
            }
            for (int r = 0; r < nv; ++r) {
                double are = 0.0, aim = 0.0;
                const double* row = basis.deriv.data() + static_cast<size_t>(r) * nv;
                for (int k = 0; k < nv; ++k) {
                    are += row[k] * q[k].real();
                    aim += row[k] * q[k].imag();
                }
                hs[2 * nc + base + r] -= cplx{are, aim} / g.ell;
            }
        }
    return from_hspec(g, 3, hs);
}

std::shared_ptr<const Leray3D> Leray3D::get(const SlabGeometry& g) {
    using Key = std::tuple<int, int, double, double>;
    static std::mutex mtx;
    static std::map<Key, std::shared_ptr<const Leray3D>> cache;
    const Key key{g.nh, g.nv, g.period, g.ell};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<Leray3D>(g)).first;
    return it->second;
}

Field3D leray_project_3d(const Field3D& v) { return (*Leray3D::get(v.geom()))(v); }

VerticalHelmholtz::VerticalHelmholtz(const SlabGeometry& g, double a, double alpha)
    : geom_(g), a_(a), alpha_(alpha) {
    if (alpha < 0.0) throw ParamError("slip coefficient alpha must be non-negative");
    const int nv = g.nv;
    const Eigen::MatrixXd d1 = deriv1(g);
    const Eigen::MatrixXd d2 = d1 * d1;

    for (long key : all_mode_keys(g)) {
        Eigen::MatrixXd m = -d2;
        m.diagonal().array() += a + kappa2_of_key(g, key);

        Eigen::MatrixXd tan = m;
        tan.row(0) = d1.row(0);
        tan(0, 0) += 2.0 * alpha;
        tan.row(nv - 1) = d1.row(nv - 1);
        tan(nv - 1, nv - 1) -= 2.0 * alpha;
        tan_.emplace(key, ModeLU(tan));

        Eigen::MatrixXd ver = m;
        ver.row(0).setZero();
        ver(0, 0) = 1.0;
        ver.row(nv - 1).setZero();
        ver(nv - 1, nv - 1) = 1.0;
        ver_.emplace(key, ModeLU(ver));
    }
}

void VerticalHelmholtz::solve_tangential(long k2key, cplx* rhs) const {
    rhs[0] = 0.0;
    rhs[geom_.nv - 1] = 0.0;
    tan_.at(k2key).solve(rhs, geom_.nv);
}

void VerticalHelmholtz::solve_vertical(long k2key, cplx* rhs) const {
    rhs[0] = 0.0;
    rhs[geom_.nv - 1] = 0.0;
    ver_.at(k2key).solve(rhs, geom_.nv);
}

}  // namespace rotslab::spectral
