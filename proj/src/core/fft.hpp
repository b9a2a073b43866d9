#pragma once

#include "common.hpp"

namespace rotslab::fft {

/// Batched in-place 2-D complex transforms over the two leading dimensions of
/// an (nh, nh, batch) array with the batch index fastest. Forward applies the
/// 1/nh^2 normalization so coefficients are true Fourier amplitudes:
/// f(x) = sum_k fhat(k) exp(i k.x). Plans are cached per (nh, batch);
/// execution on distinct arrays is thread-safe.
void forward2d(cplx* data, int nh, int batch);
void inverse2d(cplx* data, int nh, int batch);

}  // namespace rotslab::fft
