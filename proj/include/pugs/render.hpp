// render.hpp - decision-region figures.  SVG output embeds the label raster
// as a base64 PNG (hand-rolled, store-only deflate - no compression library)
// under vector circle outlines and prototype markers; PPM output is the raw
// P6 raster with the markers stamped into the pixels.  Both formats are
// byte-deterministic functions of their inputs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pugs/oracle.hpp"

namespace pugs {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

struct FigureStyle {
    std::vector<Rgb> palette;       // one region color per class, in class order
    double marker_radius_px = 3.0;  // prototype marker radius; <= 0 disables markers
    Rgb marker_outline{0, 0, 0};    // markers are white disks with this outline
    bool show_circles = true;       // draw the class circles (SVG only)
    Rgb background{255, 255, 255};
};

enum class FigureFormat {
    kSvg,
    kPpm,
};

// Evenly spaced hues around the color wheel (saturation 0.45, value 0.95),
// hue k = 360*k/classes degrees.  The exact RGB values are documented in the
// README.
std::vector<Rgb> default_palette(int classes);
FigureStyle default_style(int classes);

std::string render_figure(const RasterGrid& grid,
                          const PrototypeSolution& solution,
                          const FigureStyle& style, FigureFormat format);

// Binary "P6\n{w} {h}\n255\n" header followed by packed RGB rows.
std::string encode_ppm(const std::vector<Rgb>& pixels, int width, int height);

// Valid 8-bit truecolor PNG; the IDAT stream uses store-only deflate blocks,
// so decoders reproduce the pixels exactly.
std::string encode_png_rgb(const std::vector<Rgb>& pixels, int width, int height);

std::string base64_encode(const std::uint8_t* data, std::size_t len);

}  // namespace pugs
