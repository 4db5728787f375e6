#include "specfed/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace specfed {

void validate_finite(const Image& img, const char* what) {
    for (double v : img.data) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) + ": non-finite pixel value");
        }
    }
}

void validate_finite(const Spectrum& s, const char* what) {
    for (const auto& v : s.data) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite spectrum value");
        }
    }
}

Image make_image(int height, int width, int channels, std::vector<double> data) {
    if (height < 1 || width < 1) {
        throw std::invalid_argument("make_image: dimensions must be positive");
    }
    if (channels != 1 && channels != 3) {
        throw std::invalid_argument("make_image: channels must be 1 or 3");
    }
    if (data.size() != static_cast<std::size_t>(height) * width * channels) {
        throw std::invalid_argument("make_image: data length != H*W*C");
    }
    Image img{height, width, channels, std::move(data)};
    validate_finite(img, "make_image");
    return img;
}

Image zeros_like(int height, int width, int channels) {
    return Image{height, width, channels,
                 std::vector<double>(static_cast<std::size_t>(height) * width * channels, 0.0)};
}

Image channel_view(const Image& img, int c) {
    if (c < 0 || c >= img.channels) {
        throw std::invalid_argument("channel_view: channel out of range");
    }
    Image out = zeros_like(img.height, img.width, 1);
    for (int i = 0; i < img.pixels(); ++i) {
        out.data[i] = img.data[static_cast<std::size_t>(i) * img.channels + c];
    }
    return out;
}

void set_channel(Image& img, int c, const Image& plane) {
    if (plane.height != img.height || plane.width != img.width || plane.channels != 1) {
        throw std::invalid_argument("set_channel: shape mismatch");
    }
    for (int i = 0; i < img.pixels(); ++i) {
        img.data[static_cast<std::size_t>(i) * img.channels + c] = plane.data[i];
    }
}

Spectrum make_spectrum(int height, int width, std::vector<std::complex<double>> data) {
    if (height < 1 || width < 1) {
        throw std::invalid_argument("make_spectrum: dimensions must be positive");
    }
    if (data.size() != static_cast<std::size_t>(height) * width) {
        throw std::invalid_argument("make_spectrum: data length != H*W");
    }
    Spectrum s{height, width, std::move(data)};
    validate_finite(s, "make_spectrum");
    return s;
}

Kernel make_kernel(int size, std::vector<double> data) {
    if (size < 1 || size % 2 == 0) {
        throw std::invalid_argument("make_kernel: size must be odd and positive");
    }
    if (data.size() != static_cast<std::size_t>(size) * size) {
        throw std::invalid_argument("make_kernel: data length != size*size");
    }
    double sum = 0.0;
    for (double v : data) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("make_kernel: entries must be finite and non-negative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("make_kernel: entries must sum to 1");
    }
    const int n = size * size;
    for (int i = 0; i < n; ++i) {
        if (std::abs(data[i] - data[n - 1 - i]) > 1e-12) {
            throw std::invalid_argument("make_kernel: kernel must be centrally symmetric");
        }
    }
    return Kernel{size, std::move(data)};
}

} // namespace specfed
