#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sph/complex.hpp"

namespace sph {

/// Row-major 8-bit intensities; 0 is black.
struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(std::size_t w, std::size_t h, std::uint8_t fill = 255) : width(w), height(h), pixels(w * h, fill) {}
    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// Row-major mask; true marks foreground (black structure).
struct BinaryImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> mask;

    BinaryImage() = default;
    BinaryImage(std::size_t w, std::size_t h) : width(w), height(h), mask(w * h, 0) {}
    bool at(std::size_t x, std::size_t y) const { return mask[y * width + x] != 0; }
    void set(std::size_t x, std::size_t y, bool on = true) { mask[y * width + x] = on ? 1 : 0; }
    std::size_t foreground_count() const;
};

inline constexpr int kDefaultCutoff = 205;

/// Foreground iff intensity < cutoff.
BinaryImage threshold_image(const GrayImage& img, int cutoff = kDefaultCutoff);

/// Nearest-neighbour upscaling by an integer factor.
BinaryImage upscale(const BinaryImage& img, std::size_t factor);

/// Arrival time of the unit-speed outward front at each pixel center,
/// row-major. Equal to the Euclidean distance to the nearest foreground pixel.
struct LevelSetField {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> arrival;

    double at(std::size_t x, std::size_t y) const { return arrival[y * width + x]; }
};

/// Exact Euclidean distance transform (separable lower-envelope method on
/// integer squared distances). Throws EmptyForeground.
LevelSetField arrival_times(const BinaryImage& img);

/// Lower-star filtration of the arrival field on the pixel-center grid. Every
/// pixel square is split along its top-left to bottom-right diagonal. Vertex
/// (x, y) has id y * width + x. Throws EmptyForeground.
FilteredComplex levelset_complex(const BinaryImage& img);

/// Same grid with arrival times divided by `speed`.
FilteredComplex levelset_complex(const LevelSetField& field, double speed = 1.0);

/// Portable anymap input: P1/P4 yield a binary image directly, P2/P5 a gray
/// image rescaled to 0..255.
struct PnmImage {
    bool is_bitmap = false;
    BinaryImage bitmap;
    GrayImage graymap;
};
PnmImage read_pnm(std::istream& in);
/// Plain P1 bitmap, 1 = foreground.
void write_pbm(std::ostream& out, const BinaryImage& img);
/// Plain P2 graymap with maxval 255.
void write_pgm(std::ostream& out, const GrayImage& img);

}  // namespace sph
