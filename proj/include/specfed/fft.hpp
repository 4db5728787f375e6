#pragma once

#include "specfed/image.hpp"

namespace specfed {

// Unnormalized forward 2D DFT of a single-channel image. Handles arbitrary
// sizes: power-of-two lengths go through radix-2, the rest through Bluestein's
// chirp-z reduction.
Spectrum fft2(const Image& x);

// Exact inverse of fft2 (includes the 1/(H*W) factor). The imaginary residue
// of a real-signal round trip is discarded.
Image ifft2(const Spectrum& spectrum);

// Circular (periodic-boundary) convolution. The kernel is zero-padded and
// center-shifted to the image size before the transform.
Image conv2_circular(const Image& x, const Kernel& k);

// Same-size variant: the second image is used as the convolution kernel as
// laid out, with no center shift.
Image conv2_circular(const Image& x, const Image& k);

// Discrete Gaussian of odd size beta with sigma = beta/6, normalized to sum 1.
Kernel gaussian_kernel(int beta);

// Separable raised-cosine window: 1 at the center of the central
// relative_width*H x relative_width*W support, tapering to 0 at the support
// boundary, 0 outside.
Image hann_window2(int height, int width, double relative_width);

namespace detail {
// 1D/2D transforms used by fft2; exposed for reuse, not part of the module surface.
void fft1d(std::vector<std::complex<double>>& a, bool inverse);
void fft2d_inplace(std::vector<std::complex<double>>& grid, int h, int w, bool inverse);
} // namespace detail

} // namespace specfed
