#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <png.h>

#include "arseg/errors.hpp"
#include "arseg/raster.hpp"

namespace arseg {

namespace {

// PNM-style token reader: whitespace separates tokens, '#' starts a comment
// running to end of line.
class PnmReader {
public:
    explicit PnmReader(std::istream& in) : in_(in) {}

    int read_int(const char* what) {
        skip_space();
        int c = in_.get();
        if (c == EOF || !std::isdigit(c))
            throw MalformedHeader(std::string("expected integer for ") + what);
        long v = 0;
        while (c != EOF && std::isdigit(c)) {
            v = v * 10 + (c - '0');
            if (v > 1000000000)
                throw MalformedHeader(std::string("value too large for ") + what);
            c = in_.get();
        }
        if (c != EOF)
            in_.unget();
        return static_cast<int>(v);
    }

    void skip_space() {
        int c;
        while ((c = in_.get()) != EOF) {
            if (c == '#') {
                while ((c = in_.get()) != EOF && c != '\n') {
                }
            } else if (!std::isspace(c)) {
                in_.unget();
                return;
            }
        }
    }

private:
    std::istream& in_;
};

std::uint8_t rescale(long v, int maxval) {
    if (maxval == 255)
        return static_cast<std::uint8_t>(v);
    return static_cast<std::uint8_t>(
        std::lround(static_cast<double>(v) * 255.0 / maxval));
}

GrayImage load_pgm(std::ifstream& in, bool binary) {
    PnmReader rd(in);
    const int width = rd.read_int("width");
    const int height = rd.read_int("height");
    const int maxval = rd.read_int("maxval");
    if (width < 1 || height < 1)
        throw MalformedHeader("non-positive image dimensions");
    if (maxval < 1 || maxval > 65535)
        throw MalformedHeader("maxval out of range");

    GrayImage img(width, height);
    const std::size_t n = img.pixels.size();
    if (binary) {
        // exactly one whitespace byte separates the header from the raster
        const int sep = in.get();
        if (sep == EOF || !std::isspace(sep))
            throw MalformedHeader("missing raster separator");
        const int bytes_per = maxval > 255 ? 2 : 1;
        std::vector<char> raw(n * bytes_per);
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size())
            throw MalformedHeader("truncated pixel data");
        for (std::size_t i = 0; i < n; ++i) {
            long v;
            if (bytes_per == 2) {
                v = (static_cast<unsigned char>(raw[2 * i]) << 8) |
                    static_cast<unsigned char>(raw[2 * i + 1]);
            } else {
                v = static_cast<unsigned char>(raw[i]);
            }
            if (v > maxval)
                throw MalformedHeader("pixel value exceeds maxval");
            img.pixels[i] = rescale(v, maxval);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const int v = rd.read_int("pixel");
            if (v > maxval)
                throw MalformedHeader("pixel value exceeds maxval");
            img.pixels[i] = rescale(v, maxval);
        }
    }
    return img;
}

struct PngReadCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReadCloser() {
        if (png)
            png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp)
            std::fclose(fp);
    }
};

GrayImage load_png(const std::string& path) {
    PngReadCloser c;
    c.fp = std::fopen(path.c_str(), "rb");
    if (!c.fp)
        throw UnreadableFile("cannot open " + path);

    c.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
    if (!c.png)
        throw Error("libpng init failed");
    c.info = png_create_info_struct(c.png);
    if (!c.info)
        throw Error("libpng init failed");
    if (setjmp(png_jmpbuf(c.png)))
        throw MalformedHeader("corrupt PNG: " + path);

    png_init_io(c.png, c.fp);
    png_read_info(c.png, c.info);

    const png_uint_32 width = png_get_image_width(c.png, c.info);
    const png_uint_32 height = png_get_image_height(c.png, c.info);
    const int color = png_get_color_type(c.png, c.info);
    const int depth = png_get_bit_depth(c.png, c.info);

    // normalize everything to 8-bit gray or RGB
    if (color == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(c.png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8)
        png_set_expand_gray_1_2_4_to_8(c.png);
    if (png_get_valid(c.png, c.info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(c.png);
    if (depth == 16)
        png_set_strip_16(c.png);
    if (color & PNG_COLOR_MASK_ALPHA)
        png_set_strip_alpha(c.png);
    png_read_update_info(c.png, c.info);

    const int channels = png_get_channels(c.png, c.info);
    if (channels != 1 && channels != 3)
        throw UnsupportedFormat("unsupported PNG channel layout");

    std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * channels);
    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    for (png_uint_32 y = 0; y < height; ++y) {
        png_read_row(c.png, row.data(), nullptr);
        for (png_uint_32 x = 0; x < width; ++x) {
            std::uint8_t g;
            if (channels == 1) {
                g = row[x];
            } else {
                const double luma = 0.299 * row[3 * x] + 0.587 * row[3 * x + 1] +
                                    0.114 * row[3 * x + 2];
                g = static_cast<std::uint8_t>(std::lround(luma));
            }
            img.set(static_cast<int>(x), static_cast<int>(y), g);
        }
    }
    return img;
}

struct PngWriteCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriteCloser() {
        if (png)
            png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp)
            std::fclose(fp);
    }
};

void write_png_impl(const std::string& path, int width, int height,
                    const std::uint8_t* data, int channels) {
    PngWriteCloser c;
    c.fp = std::fopen(path.c_str(), "wb");
    if (!c.fp)
        throw UnreadableFile("cannot write " + path);
    c.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    nullptr);
    if (!c.png)
        throw Error("libpng init failed");
    c.info = png_create_info_struct(c.png);
    if (!c.info)
        throw Error("libpng init failed");
    if (setjmp(png_jmpbuf(c.png)))
        throw Error("PNG write failed: " + path);

    png_init_io(c.png, c.fp);
    png_set_IHDR(c.png, c.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(c.png, c.info);
    for (int y = 0; y < height; ++y)
        png_write_row(c.png, const_cast<png_bytep>(
                                 data + static_cast<std::size_t>(y) * width *
                                            channels));
    png_write_end(c.png, c.info);
}

} // namespace

GrayImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnreadableFile("cannot open " + path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2)
        throw MalformedHeader("file too short: " + path);

    if (magic[0] == 'P' && magic[1] == '5')
        return load_pgm(in, /*binary=*/true);
    if (magic[0] == 'P' && magic[1] == '2')
        return load_pgm(in, /*binary=*/false);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    throw UnsupportedFormat("not a PGM (P5/P2) or PNG file: " + path);
}

void write_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UnreadableFile("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out)
        throw Error("short write: " + path);
}

void write_png(const std::string& path, const GrayImage& img) {
    write_png_impl(path, img.width, img.height, img.pixels.data(), 1);
}

void write_png_rgb(const std::string& path, const RgbImage& img) {
    write_png_impl(path, img.width, img.height, img.rgb.data(), 3);
}

} // namespace arseg
