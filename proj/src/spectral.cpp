#include "specfed/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specfed {

namespace {

constexpr double kXi0 = 3.0 * std::numbers::pi / 4.0; // mother center frequency
constexpr double kSigma0 = 0.8;                       // mother envelope width (spatial)

// Gaussian factor of the Morlet in the frequency domain, evaluated at a point
// of the rotated/dilated frequency plane. slant < 1 narrows the filter across
// the wave direction, giving orientation selectivity.
double gabor_hat(double w1, double w2, double sigma, double xi, double slant) {
    const double d1 = w1 - xi;
    const double d2 = w2 / slant;
    return std::exp(-sigma * sigma * (d1 * d1 + d2 * d2) * 0.5);
}

// Periodized frequency response: sampling on the pixel grid folds the
// continuous response at 2*pi multiples, so we sum nearby aliases.
double periodized_morlet(double wy, double wx, double scale, double cos_t, double sin_t,
                         double sigma, double xi, double slant, double kappa) {
    double acc = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int p = -2; p <= 2; ++p) {
        for (int q = -2; q <= 2; ++q) {
            const double ay = wy + two_pi * p;
            const double ax = wx + two_pi * q;
            // rotate by -theta, then dilate by a^j; orientation axis is x
            const double r1 = scale * (cos_t * ax + sin_t * ay);
            const double r2 = scale * (-sin_t * ax + cos_t * ay);
            acc += gabor_hat(r1, r2, sigma, xi, slant) - kappa * gabor_hat(r1, r2, sigma, 0.0, slant);
        }
    }
    return acc;
}

double periodized_lowpass(double wy, double wx, double sigma) {
    double acc = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int p = -2; p <= 2; ++p) {
        for (int q = -2; q <= 2; ++q) {
            const double ay = wy + two_pi * p;
            const double ax = wx + two_pi * q;
            acc += std::exp(-sigma * sigma * (ax * ax + ay * ay) * 0.5);
        }
    }
    return acc;
}

// Frequency of grid bin m of n samples, wrapped to [-pi, pi).
double bin_frequency(int m, int n) {
    const int f = m <= n / 2 ? m : m - n;
    return 2.0 * std::numbers::pi * static_cast<double>(f) / static_cast<double>(n);
}

} // namespace

FilterBank build_filter_bank(int height, int width, int J, int L, int Q) {
    if (J < 1 || L < 1 || Q < 1) {
        throw std::invalid_argument("build_filter_bank: J, L, Q must be >= 1");
    }
    if ((1 << J) > std::min(height, width)) {
        throw std::invalid_argument("build_filter_bank: 2^J exceeds signal support");
    }
    const double a = std::pow(2.0, 1.0 / Q);
    const double slant = 4.0 / (3.0 * std::max(L, 2)) * 2.0; // ~4/L, clamped for L=1
    const int n = height * width;

    FilterBank bank;
    bank.height = height;
    bank.width = width;
    bank.J = J;
    bank.L = L;
    bank.Q = Q;
    bank.psi_hat.reserve(static_cast<std::size_t>(J) * L);

    // kappa makes the mother wavelet exactly zero-mean after periodization;
    // it is scale/rotation invariant since the aliased sums transform together
    // only approximately, so it is recomputed per filter at omega = 0.
    for (int j = 0; j < J; ++j) {
        const double scale = std::pow(a, j);
        for (int l = 0; l < L; ++l) {
            const double theta = std::numbers::pi * l / L;
            const double cos_t = std::cos(theta);
            const double sin_t = std::sin(theta);
            double gab0 = 0.0;
            double gauss0 = 0.0;
            {
                const double two_pi = 2.0 * std::numbers::pi;
                for (int p = -2; p <= 2; ++p) {
                    for (int q = -2; q <= 2; ++q) {
                        const double ay = two_pi * p;
                        const double ax = two_pi * q;
                        const double r1 = scale * (cos_t * ax + sin_t * ay);
                        const double r2 = scale * (-sin_t * ax + cos_t * ay);
                        gab0 += gabor_hat(r1, r2, kSigma0, kXi0, slant);
                        gauss0 += gabor_hat(r1, r2, kSigma0, 0.0, slant);
                    }
                }
            }
            const double kappa = gab0 / gauss0;

            Spectrum psi{height, width, std::vector<std::complex<double>>(n)};
            for (int y = 0; y < height; ++y) {
                const double wy = bin_frequency(y, height);
                for (int x = 0; x < width; ++x) {
                    const double wx = bin_frequency(x, width);
                    psi.at(y, x) = periodized_morlet(wy, wx, scale, cos_t, sin_t, kSigma0,
                                                     kXi0, slant, kappa);
                }
            }
            bank.psi_hat.push_back(std::move(psi));
        }
    }

    const double sigma_phi = kSigma0 * std::pow(a, J);
    bank.phi_hat = Spectrum{height, width, std::vector<std::complex<double>>(n)};
    for (int y = 0; y < height; ++y) {
        const double wy = bin_frequency(y, height);
        for (int x = 0; x < width; ++x) {
            bank.phi_hat.at(y, x) = periodized_lowpass(wy, bin_frequency(x, width), sigma_phi);
        }
    }

    auto lp_sup = [&bank, n]() {
        double sup = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = std::norm(bank.phi_hat.data[i]);
            for (const Spectrum& psi : bank.psi_hat) s += std::norm(psi.data[i]);
            sup = std::max(sup, s);
        }
        return sup;
    };

    const double raw = lp_sup();
    if (raw > 1.0) {
        const double rescale = 1.0 / std::sqrt(raw);
        for (Spectrum& psi : bank.psi_hat) {
            for (auto& v : psi.data) v *= rescale;
        }
        for (auto& v : bank.phi_hat.data) v *= rescale;
    }
    bank.lp_bound = lp_sup();
    return bank;
}

namespace {

// |ifft2(x_hat .* f_hat)| as a real image, element-wise complex modulus.
Image filtered_modulus(const Spectrum& x_hat, const Spectrum& f_hat) {
    Spectrum prod = x_hat;
    for (std::size_t i = 0; i < prod.data.size(); ++i) prod.data[i] *= f_hat.data[i];
    std::vector<std::complex<double>> grid = prod.data;
    // inverse transform without dropping the imaginary part
    std::vector<std::complex<double>> line;
    const int h = prod.height;
    const int w = prod.width;
    for (int y = 0; y < h; ++y) {
        line.assign(grid.begin() + static_cast<std::size_t>(y) * w,
                    grid.begin() + static_cast<std::size_t>(y + 1) * w);
        detail::fft1d(line, true);
        std::copy(line.begin(), line.end(), grid.begin() + static_cast<std::size_t>(y) * w);
    }
    line.resize(h);
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) line[y] = grid[static_cast<std::size_t>(y) * w + x];
        detail::fft1d(line, true);
        for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = line[y];
    }
    const double scale = 1.0 / static_cast<double>(h * w);
    Image out = zeros_like(h, w, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) out.data[i] = std::abs(grid[i]) * scale;
    return out;
}

double mean_of(const Image& img) {
    double s = 0.0;
    for (double v : img.data) s += v;
    return s / static_cast<double>(img.data.size());
}

} // namespace

Embedding wst_order1(const Image& x, const FilterBank& bank) {
    if (x.channels != 1) {
        throw std::invalid_argument("wst_order1: expects a single-channel image");
    }
    if (x.height != bank.height || x.width != bank.width) {
        throw std::invalid_argument("wst_order1: image shape does not match filter bank");
    }
    const Spectrum x_hat = fft2(x);

    Embedding e;
    e.rep_kind = RepKind::WST;
    e.values.reserve(1 + bank.psi_hat.size());
    e.values.push_back(mean_of(filtered_modulus(x_hat, bank.phi_hat)));
    for (const Spectrum& psi : bank.psi_hat) {
        const Image u = filtered_modulus(x_hat, psi);
        e.values.push_back(mean_of(filtered_modulus(fft2(u), bank.phi_hat)));
    }
    return e;
}

Embedding ft_embedding(const Image& x, double relative_width, int pool) {
    if (x.channels != 1) {
        throw std::invalid_argument("ft_embedding: expects a single-channel image");
    }
    if (pool < 1 || x.height % pool != 0 || x.width % pool != 0) {
        throw std::invalid_argument("ft_embedding: pool must evenly divide the image size");
    }
    const Image window = hann_window2(x.height, x.width, relative_width);
    Image windowed = x;
    for (std::size_t i = 0; i < windowed.data.size(); ++i) windowed.data[i] *= window.data[i];

    const Spectrum s = fft2(windowed);
    // fftshifted magnitude, DC moved to the center bin
    Image mag = zeros_like(x.height, x.width, 1);
    const int sy = x.height / 2;
    const int sx = x.width / 2;
    for (int y = 0; y < x.height; ++y) {
        for (int xx = 0; xx < x.width; ++xx) {
            mag.at((y + sy) % x.height, (xx + sx) % x.width) = std::abs(s.at(y, xx));
        }
    }

    const int cell_h = x.height / pool;
    const int cell_w = x.width / pool;
    Embedding e;
    e.rep_kind = RepKind::FT;
    e.values.assign(static_cast<std::size_t>(pool) * pool, 0.0);
    for (int by = 0; by < pool; ++by) {
        for (int bx = 0; bx < pool; ++bx) {
            double acc = 0.0;
            for (int y = 0; y < cell_h; ++y) {
                for (int xx = 0; xx < cell_w; ++xx) {
                    acc += mag.at(by * cell_h + y, bx * cell_w + xx);
                }
            }
            e.values[static_cast<std::size_t>(by) * pool + bx] = acc / (cell_h * cell_w);
        }
    }
    return e;
}

Embedding embed(const Image& x, RepKind rep_kind, const FilterBank* bank, const FtParams& ft) {
    Embedding out;
    out.rep_kind = rep_kind;
    for (int c = 0; c < x.channels; ++c) {
        const Image plane = x.channels == 1 ? x : channel_view(x, c);
        Embedding part;
        if (rep_kind == RepKind::WST) {
            if (bank == nullptr) {
                throw std::invalid_argument("embed: WST embedding requires a filter bank");
            }
            part = wst_order1(plane, *bank);
        } else {
            part = ft_embedding(plane, ft.relative_width, ft.pool);
        }
        out.values.insert(out.values.end(), part.values.begin(), part.values.end());
    }
    for (double& v : out.values) v = std::abs(v);
    return out;
}

int embedding_length(RepKind rep_kind, int channels, int J, int L, int ft_pool) {
    return rep_kind == RepKind::WST ? channels * (1 + J * L) : channels * ft_pool * ft_pool;
}

} // namespace specfed
