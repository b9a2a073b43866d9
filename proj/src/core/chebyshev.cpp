#include "core/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rotslab::cheb {

namespace {

Basis build(int n) {
    if (n < 2) throw std::invalid_argument("chebyshev basis needs at least 2 nodes");
    const int N = n - 1;
    const double pi = 3.14159265358979323846;

    Basis b;
    b.n = n;
    b.nodes.resize(n);
    for (int j = 0; j < n; ++j) b.nodes[j] = std::cos(pi * j / N);

    // Coefficient transforms. T_m(x_j) = cos(pi*m*j/N); the inverse is the
    // discrete cosine sum with halved end terms.
    b.coeffs_to_vals.assign(static_cast<size_t>(n) * n, 0.0);
    b.vals_to_coeffs.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) b.coeffs_to_vals[j * n + m] = std::cos(pi * m * j / N);
    for (int m = 0; m < n; ++m) {
        const double cm = (m == 0 || m == N) ? 1.0 : 2.0;
        for (int j = 0; j < n; ++j) {
            const double ej = (j == 0 || j == N) ? 0.5 : 1.0;
            b.vals_to_coeffs[m * n + j] = cm / N * ej * std::cos(pi * m * j / N);
        }
    }

    // Quadrature weights through the coefficient transform: integral of T_m
    // over [-1,1] is 0 for odd m and 2/(1-m^2) for even m. Exactness through
    // degree n-1 comes for free with this construction.
    b.weights.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double w = 0.0;
        for (int m = 0; m < n; m += 2) w += 2.0 / (1.0 - m * m) * b.vals_to_coeffs[m * n + j];
        b.weights[j] = w;
    }

    // Differentiation matrix with the negative-sum trick on the diagonal.
    b.deriv.assign(static_cast<size_t>(n) * n, 0.0);
    auto c = [&](int i) { return (i == 0 || i == N) ? 2.0 : 1.0; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            b.deriv[i * n + j] = c(i) / c(j) * sign / (b.nodes[i] - b.nodes[j]);
        }
        double rowsum = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) rowsum += b.deriv[i * n + j];
        b.deriv[i * n + i] = -rowsum;
    }
    return b;
}

}  // namespace

const Basis& Basis::get(int n) {
    static std::mutex mtx;
    static std::map<int, Basis> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return it->second;
}

void apply_pencil_matrix(const double* mat, int rows_out, int rows_in, const double* in,
                         double* out, long npencils, int interleave) {
    for (long p = 0; p < npencils; ++p) {
        const double* src = in + p * rows_in * interleave;
        double* dst = out + p * rows_out * interleave;
        for (int r = 0; r < rows_out; ++r) {
            const double* row = mat + static_cast<size_t>(r) * rows_in;
            for (int s = 0; s < interleave; ++s) {
                double acc = 0.0;
                for (int q = 0; q < rows_in; ++q) acc += row[q] * src[q * interleave + s];
                dst[r * interleave + s] = acc;
            }
        }
    }
}

}  // namespace rotslab::cheb
