#include "specfed/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specfed {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, n a power of two, unnormalized.
void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const cd wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cd u = a[i + j];
                const cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein chirp-z: expresses a length-n DFT as a circular convolution of
// length m >= 2n-1 (padded to a power of two). Angles are reduced mod 2n to
// keep the chirp accurate for large indices.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<cd> chirp(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const unsigned long long k2 = (static_cast<unsigned long long>(k) * k) % (2ULL * n);
        const double ang = std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = cd(std::cos(ang), sign * std::sin(ang));
    }

    std::vector<cd> u(m, cd(0.0, 0.0));
    std::vector<cd> v(m, cd(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = std::conj(chirp[k]);
        if (k != 0) v[m - k] = std::conj(chirp[k]);
    }
    fft_pow2(u, false);
    fft_pow2(v, false);
    for (std::size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_pow2(u, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * chirp[k];
}

} // namespace

namespace detail {

void fft1d(std::vector<cd>& a, bool inverse) {
    if (a.size() <= 1) return;
    if (is_pow2(a.size())) {
        fft_pow2(a, inverse);
    } else {
        fft_bluestein(a, inverse);
    }
}

// Unnormalized 2D transform over rows then columns.
void fft2d_inplace(std::vector<cd>& grid, int h, int w, bool inverse) {
    std::vector<cd> line;
    for (int y = 0; y < h; ++y) {
        line.assign(grid.begin() + static_cast<std::size_t>(y) * w,
                    grid.begin() + static_cast<std::size_t>(y + 1) * w);
        fft1d(line, inverse);
        std::copy(line.begin(), line.end(), grid.begin() + static_cast<std::size_t>(y) * w);
    }
    line.resize(h);
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) line[y] = grid[static_cast<std::size_t>(y) * w + x];
        fft1d(line, inverse);
        for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = line[y];
    }
}

} // namespace detail

Spectrum fft2(const Image& x) {
    if (x.channels != 1) {
        throw std::invalid_argument("fft2: expects a single-channel image");
    }
    validate_finite(x, "fft2");
    std::vector<cd> grid(x.data.begin(), x.data.end());
    fft2d_inplace(grid, x.height, x.width, false);
    return Spectrum{x.height, x.width, std::move(grid)};
}

Image ifft2(const Spectrum& spectrum) {
    validate_finite(spectrum, "ifft2");
    std::vector<cd> grid = spectrum.data;
    fft2d_inplace(grid, spectrum.height, spectrum.width, true);
    const double scale = 1.0 / (static_cast<double>(spectrum.height) * spectrum.width);
    Image out = zeros_like(spectrum.height, spectrum.width, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) out.data[i] = grid[i].real() * scale;
    return out;
}

namespace {

Image pad_kernel_centered(const Kernel& k, int h, int w) {
    Image padded = zeros_like(h, w, 1);
    const int c = (k.size - 1) / 2;
    for (int ky = 0; ky < k.size; ++ky) {
        const int y = ((ky - c) % h + h) % h;
        for (int kx = 0; kx < k.size; ++kx) {
            const int x = ((kx - c) % w + w) % w;
            padded.at(y, x) += k.at(ky, kx);
        }
    }
    return padded;
}

Image conv2_spectral(const Image& x, const Image& kernel_grid) {
    Spectrum xs = fft2(x);
    Spectrum ks = fft2(kernel_grid);
    for (std::size_t i = 0; i < xs.data.size(); ++i) xs.data[i] *= ks.data[i];
    return ifft2(xs);
}

} // namespace

Image conv2_circular(const Image& x, const Kernel& k) {
    if (x.channels != 1) {
        throw std::invalid_argument("conv2_circular: expects a single-channel image");
    }
    if (k.size > x.height || k.size > x.width) {
        throw std::invalid_argument("conv2_circular: kernel larger than image");
    }
    return conv2_spectral(x, pad_kernel_centered(k, x.height, x.width));
}

Image conv2_circular(const Image& x, const Image& k) {
    if (x.channels != 1 || k.channels != 1) {
        throw std::invalid_argument("conv2_circular: expects single-channel images");
    }
    if (k.height != x.height || k.width != x.width) {
        throw std::invalid_argument("conv2_circular: image kernel must match image size");
    }
    return conv2_spectral(x, k);
}

Kernel gaussian_kernel(int beta) {
    if (beta < 1 || beta % 2 == 0) {
        throw std::invalid_argument("gaussian_kernel: beta must be odd and positive");
    }
    const double sigma = beta / 6.0;
    const int c = (beta - 1) / 2;
    std::vector<double> data(static_cast<std::size_t>(beta) * beta);
    double sum = 0.0;
    for (int y = 0; y < beta; ++y) {
        for (int x = 0; x < beta; ++x) {
            const double u = y - c;
            const double v = x - c;
            const double g = std::exp(-(u * u + v * v) / (2.0 * sigma * sigma));
            data[static_cast<std::size_t>(y) * beta + x] = g;
            sum += g;
        }
    }
    for (double& v : data) v /= sum;
    return make_kernel(beta, std::move(data));
}

namespace {

std::vector<double> hann_line(int n, double relative_width) {
    std::vector<double> w(n, 0.0);
    const int support = std::max(1, static_cast<int>(std::lround(relative_width * n)));
    const int start = (n - support) / 2;
    for (int i = 0; i < support; ++i) {
        w[start + i] = support == 1
                           ? 1.0
                           : 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (support - 1)));
    }
    return w;
}

} // namespace

Image hann_window2(int height, int width, double relative_width) {
    if (height < 1 || width < 1) {
        throw std::invalid_argument("hann_window2: dimensions must be positive");
    }
    if (!(relative_width > 0.0) || relative_width > 1.0) {
        throw std::invalid_argument("hann_window2: relative_width must be in (0,1]");
    }
    const std::vector<double> wy = hann_line(height, relative_width);
    const std::vector<double> wx = hann_line(width, relative_width);
    Image out = zeros_like(height, width, 1);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) out.at(y, x) = wy[y] * wx[x];
    }
    return out;
}

} // namespace specfed
