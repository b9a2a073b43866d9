#pragma once

#include <vector>

namespace rotslab::cheb {

/// Chebyshev-Gauss-Lobatto collocation machinery on the reference interval
/// [-1,1]. Nodes are ordered descending: node 0 sits at z=+1, node n-1 at
/// z=-1, so slab boundary traces are plain end slices. All matrices are
/// row-major n x n.
struct Basis {
    int n = 0;
    std::vector<double> nodes;           ///< CGL nodes, descending
    std::vector<double> weights;         ///< quadrature weights, exact through degree n-1, sum 2
    std::vector<double> deriv;           ///< spectral differentiation matrix
    std::vector<double> vals_to_coeffs;  ///< nodal values -> Chebyshev coefficients
    std::vector<double> coeffs_to_vals;  ///< Chebyshev coefficients -> nodal values

    /// Shared immutable basis for a given node count (cached; thread-safe).
    static const Basis& get(int n);
};

/// Apply a rows_out x rows_in matrix to every contiguous pencil of a
/// (npencils x rows_in) array, writing (npencils x rows_out). In/out may not
/// alias. Works elementwise on interleaved complex data when stride2 = 2.
void apply_pencil_matrix(const double* mat, int rows_out, int rows_in, const double* in,
                         double* out, long npencils, int interleave);

}  // namespace rotslab::cheb
