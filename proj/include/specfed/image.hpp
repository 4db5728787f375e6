#pragma once

#include <complex>
#include <vector>

namespace specfed {

// Dense 2D grid, row-major, channel-last: data[(y*width + x)*channels + c].
// Clean inputs live in [0,1]; attacked or derived images may exceed that, so
// only finiteness is enforced here.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 1;
    std::vector<double> data;

    int pixels() const { return height * width; }
    int size() const { return height * width * channels; }

    double& at(int y, int x, int c = 0) { return data[(y * width + x) * channels + c]; }
    double at(int y, int x, int c = 0) const { return data[(y * width + x) * channels + c]; }
};

Image make_image(int height, int width, int channels, std::vector<double> data);
Image zeros_like(int height, int width, int channels = 1);

// Extract/insert one channel as a single-channel image.
Image channel_view(const Image& img, int c);
void set_channel(Image& img, int c, const Image& plane);

// Complex H x W grid, row-major.
struct Spectrum {
    int height = 0;
    int width = 0;
    std::vector<std::complex<double>> data;

    std::complex<double>& at(int y, int x) { return data[y * width + x]; }
    std::complex<double> at(int y, int x) const { return data[y * width + x]; }
};

Spectrum make_spectrum(int height, int width, std::vector<std::complex<double>> data);

// Odd square kernel: entries non-negative, sum 1, centrally symmetric.
struct Kernel {
    int size = 1; // odd
    std::vector<double> data;

    double at(int y, int x) const { return data[y * size + x]; }
};

Kernel make_kernel(int size, std::vector<double> data);

void validate_finite(const Image& img, const char* what);
void validate_finite(const Spectrum& s, const char* what);

} // namespace specfed
