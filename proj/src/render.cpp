// render.cpp - deterministic SVG/PPM figure serialization.
#include "pugs/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace pugs {

namespace {

std::array<std::uint32_t, 256> make_crc_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t n = 0; n < 256; ++n) {
        std::uint32_t c = n;
        for (int k = 0; k < 8; ++k)
            c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        table[n] = c;
    }
    return table;
}

std::uint32_t crc32(const std::string& data) {
    static const std::array<std::uint32_t, 256> table = make_crc_table();
    std::uint32_t c = 0xFFFFFFFFu;
    for (unsigned char byte : data)
        c = table[(c ^ byte) & 0xFFu] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

std::uint32_t adler32(const std::string& data) {
    std::uint32_t a = 1, b = 0;
    for (unsigned char byte : data) {
        a = (a + byte) % 65521u;
        b = (b + a) % 65521u;
    }
    return (b << 16) | a;
}

void append_be32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>(v & 0xFF));
}

void append_chunk(std::string& out, const char type[5], const std::string& payload) {
    append_be32(out, static_cast<std::uint32_t>(payload.size()));
    std::string body = std::string(type) + payload;
    out += body;
    append_be32(out, crc32(body));
}

Rgb hsv_to_rgb(double h, double s, double v) {
    const double hh = h / 60.0;
    const int sector = static_cast<int>(std::floor(hh)) % 6;
    const double f = hh - std::floor(hh);
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r = 0, g = 0, b = 0;
    switch (sector) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    const auto byte = [](double x) {
        return static_cast<std::uint8_t>(std::lround(x * 255.0));
    };
    return {byte(r), byte(g), byte(b)};
}

std::string hex_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void check_raster(const std::vector<Rgb>& pixels, int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("render: dimensions must be positive");
    if (pixels.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("render: pixel buffer does not match dimensions");
}

// Stamps a white disk with a 1px outline for every prototype; no-op when the
// marker radius is not positive.
void stamp_markers(std::vector<Rgb>& pixels, int width, int height,
                   const std::vector<LabeledPoint>& protos, double extent,
                   const FigureStyle& style) {
    const double radius = style.marker_radius_px;
    if (radius <= 0.0) return;
    const Rgb fill{255, 255, 255};
    for (const LabeledPoint& proto : protos) {
        const double px = (proto.p.x + extent) / (2.0 * extent) * width;
        const double py = (extent - proto.p.y) / (2.0 * extent) * height;
        const int j0 = std::max(0, static_cast<int>(std::floor(px - radius - 2.0)));
        const int j1 = std::min(width - 1, static_cast<int>(std::ceil(px + radius + 2.0)));
        const int i0 = std::max(0, static_cast<int>(std::floor(py - radius - 2.0)));
        const int i1 = std::min(height - 1, static_cast<int>(std::ceil(py + radius + 2.0)));
        for (int i = i0; i <= i1; ++i) {
            for (int j = j0; j <= j1; ++j) {
                const double dx = j + 0.5 - px;
                const double dy = i + 0.5 - py;
                const double d = std::sqrt(dx * dx + dy * dy);
                if (d <= radius)
                    pixels[static_cast<size_t>(i) * width + j] = fill;
                else if (d <= radius + 1.0)
                    pixels[static_cast<size_t>(i) * width + j] = style.marker_outline;
            }
        }
    }
}

}  // namespace

std::vector<Rgb> default_palette(int classes) {
    if (classes < 1)
        throw std::invalid_argument("default_palette: need at least one class");
    std::vector<Rgb> palette;
    palette.reserve(static_cast<size_t>(classes));
    for (int k = 0; k < classes; ++k)
        palette.push_back(hsv_to_rgb(360.0 * k / classes, 0.45, 0.95));
    return palette;
}

FigureStyle default_style(int classes) {
    FigureStyle style;
    style.palette = default_palette(classes);
    return style;
}

std::string encode_ppm(const std::vector<Rgb>& pixels, int width, int height) {
    check_raster(pixels, width, height);
    std::string out = "P6\n" + std::to_string(width) + " " +
                      std::to_string(height) + "\n255\n";
    out.reserve(out.size() + pixels.size() * 3);
    for (const Rgb& px : pixels) {
        out.push_back(static_cast<char>(px.r));
        out.push_back(static_cast<char>(px.g));
        out.push_back(static_cast<char>(px.b));
    }
    return out;
}

std::string encode_png_rgb(const std::vector<Rgb>& pixels, int width, int height) {
    check_raster(pixels, width, height);

    // One filter byte (0 = none) per scanline, then the packed RGB row.
    std::string raw;
    raw.reserve(static_cast<size_t>(height) * (1 + 3 * static_cast<size_t>(width)));
    for (int i = 0; i < height; ++i) {
        raw.push_back('\0');
        const Rgb* row = pixels.data() + static_cast<size_t>(i) * width;
        for (int j = 0; j < width; ++j) {
            raw.push_back(static_cast<char>(row[j].r));
            raw.push_back(static_cast<char>(row[j].g));
            raw.push_back(static_cast<char>(row[j].b));
        }
    }

    // zlib wrapper around store-only deflate blocks of at most 65535 bytes.
    std::string zlib;
    zlib.push_back(static_cast<char>(0x78));
    zlib.push_back(static_cast<char>(0x01));
    const size_t block_max = 65535;
    for (size_t pos = 0; pos < raw.size() || (raw.empty() && pos == 0);) {
        const size_t len = std::min(block_max, raw.size() - pos);
        const bool last = pos + len == raw.size();
        zlib.push_back(last ? '\x01' : '\x00');
        zlib.push_back(static_cast<char>(len & 0xFF));
        zlib.push_back(static_cast<char>((len >> 8) & 0xFF));
        zlib.push_back(static_cast<char>(~len & 0xFF));
        zlib.push_back(static_cast<char>((~len >> 8) & 0xFF));
        zlib.append(raw, pos, len);
        pos += len;
        if (last) break;
    }
    append_be32(zlib, adler32(raw));

    std::string ihdr;
    append_be32(ihdr, static_cast<std::uint32_t>(width));
    append_be32(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back('\x08');  // bit depth
    ihdr.push_back('\x02');  // truecolor
    ihdr.push_back('\x00');  // deflate
    ihdr.push_back('\x00');  // adaptive filtering
    ihdr.push_back('\x00');  // no interlace

    std::string out("\x89PNG\r\n\x1a\n", 8);
    append_chunk(out, "IHDR", ihdr);
    append_chunk(out, "IDAT", zlib);
    append_chunk(out, "IEND", "");
    return out;
}

std::string base64_encode(const std::uint8_t* data, std::size_t len) {
    static const char alphabet[] =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((len + 2) / 3 * 4);
    size_t i = 0;
    for (; i + 3 <= len; i += 3) {
        const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(alphabet[(v >> 18) & 63]);
        out.push_back(alphabet[(v >> 12) & 63]);
        out.push_back(alphabet[(v >> 6) & 63]);
        out.push_back(alphabet[v & 63]);
    }
    if (i + 1 == len) {
        const std::uint32_t v = data[i] << 16;
        out.push_back(alphabet[(v >> 18) & 63]);
        out.push_back(alphabet[(v >> 12) & 63]);
        out += "==";
    } else if (i + 2 == len) {
        const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(alphabet[(v >> 18) & 63]);
        out.push_back(alphabet[(v >> 12) & 63]);
        out.push_back(alphabet[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::string render_figure(const RasterGrid& grid,
                          const PrototypeSolution& solution,
                          const FigureStyle& style, FigureFormat format) {
    const int classes = solution.circles();
    if (static_cast<int>(style.palette.size()) < classes)
        throw std::invalid_argument("render_figure: palette has fewer colors than classes");
    if (grid.labels.size() != static_cast<size_t>(grid.width) * grid.height)
        throw std::invalid_argument("render_figure: label buffer does not match dimensions");
    for (std::uint16_t label : grid.labels)
        if (label >= classes)
            throw std::invalid_argument("render_figure: raster label outside the class range");

    const std::vector<LabeledPoint> protos = solution_prototypes(solution);

    std::vector<Rgb> pixels(grid.labels.size());
    for (size_t k = 0; k < grid.labels.size(); ++k)
        pixels[k] = style.palette[grid.labels[k]];

    if (format == FigureFormat::kPpm) {
        stamp_markers(pixels, grid.width, grid.height, protos, grid.extent, style);
        return encode_ppm(pixels, grid.width, grid.height);
    }

    const std::string png = encode_png_rgb(pixels, grid.width, grid.height);
    const std::string b64 =
        base64_encode(reinterpret_cast<const std::uint8_t*>(png.data()), png.size());

    const int w = grid.width;
    const int h = grid.height;
    const double extent = grid.extent;
    const auto to_px_x = [&](double x) { return (x + extent) / (2.0 * extent) * w; };
    const auto to_px_y = [&](double y) { return (extent - y) / (2.0 * extent) * h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" "
           "xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
    svg += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" fill=\"" + hex_color(style.background) + "\"/>\n";
    svg += "<image x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) +
           "\" preserveAspectRatio=\"none\" image-rendering=\"pixelated\" "
           "xlink:href=\"data:image/png;base64," + b64 + "\"/>\n";

    if (style.show_circles) {
        for (int t = 1; t < classes; ++t) {
            const double r = t * solution.c;
            svg += "<ellipse cx=\"" + fmt(to_px_x(0.0)) + "\" cy=\"" +
                   fmt(to_px_y(0.0)) + "\" rx=\"" + fmt(r / (2.0 * extent) * w) +
                   "\" ry=\"" + fmt(r / (2.0 * extent) * h) +
                   "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        }
    }

    if (style.marker_radius_px > 0.0) {
        for (const LabeledPoint& proto : protos) {
            svg += "<circle cx=\"" + fmt(to_px_x(proto.p.x)) + "\" cy=\"" +
                   fmt(to_px_y(proto.p.y)) + "\" r=\"" + fmt(style.marker_radius_px) +
                   "\" fill=\"#ffffff\" stroke=\"" + hex_color(style.marker_outline) +
                   "\" stroke-width=\"1\"/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace pugs
