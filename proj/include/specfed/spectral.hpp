#pragma once

#include "specfed/fft.hpp"
#include "specfed/image.hpp"

#include <vector>

namespace specfed {

enum class RepKind { WST, FT };

// Fixed-length non-negative feature vector of one client or image.
struct Embedding {
    RepKind rep_kind = RepKind::WST;
    std::vector<double> values;
};

// Morlet wavelet bank in the frequency domain, plus the Gaussian low-pass.
// Filters are rescaled whenever the raw Littlewood-Paley sum exceeds 1, so
// the wavelet transform (and with it the scattering operator) is non-expansive.
struct FilterBank {
    int height = 0;
    int width = 0;
    int J = 0; // scale count
    int L = 0; // rotation count
    int Q = 1; // scales per octave, a = 2^(1/Q)
    std::vector<Spectrum> psi_hat; // J*L band-pass filters, scale-major
    Spectrum phi_hat;              // low-pass at scale a^J
    double lp_bound = 0.0;         // measured sup of the Littlewood-Paley sum
};

FilterBank build_filter_bank(int height, int width, int J, int L, int Q = 1);

// Order-0 + order-1 scattering coefficients with global average pooling:
// [ mean|x * phi|, mean||x * psi_jl| * phi| ... ], length 1 + J*L.
Embedding wst_order1(const Image& x, const FilterBank& bank);

// Windowed Fourier magnitude embedding: Hann window, FFT, fftshifted
// magnitude average-pooled onto a pool x pool grid, length pool^2.
Embedding ft_embedding(const Image& x, double relative_width, int pool);

struct FtParams {
    double relative_width = 0.5;
    int pool = 8;
};

// Per-channel dispatch to wst_order1 / ft_embedding, channels concatenated,
// element-wise modulus applied (a no-op for WST output).
Embedding embed(const Image& x, RepKind rep_kind, const FilterBank* bank, const FtParams& ft);

// Embedding length for a given configuration, per channel count.
int embedding_length(RepKind rep_kind, int channels, int J, int L, int ft_pool);

} // namespace specfed
