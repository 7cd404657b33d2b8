#include "sph/levelset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace sph {

std::size_t BinaryImage::foreground_count() const {
    return static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](std::uint8_t m) { return m != 0; }));
}

BinaryImage threshold_image(const GrayImage& img, int cutoff) {
    if (cutoff < 0 || cutoff > 255) throw Error(ErrorKind::InvalidArgument, "cutoff must be in [0, 255]");
    if (img.pixels.size() != img.width * img.height)
        throw Error(ErrorKind::InvalidArgument, "pixel count does not match width * height");
    BinaryImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) out.mask[i] = img.pixels[i] < cutoff ? 1 : 0;
    return out;
}

BinaryImage upscale(const BinaryImage& img, std::size_t factor) {
    if (factor < 1) throw Error(ErrorKind::InvalidArgument, "scale factor must be >= 1");
    BinaryImage out(img.width * factor, img.height * factor);
    for (std::size_t y = 0; y < out.height; ++y)
        for (std::size_t x = 0; x < out.width; ++x) out.set(x, y, img.at(x / factor, y / factor));
    return out;
}

namespace {

// Stand-in for "no foreground in this column"; exceeds any squared distance
// on a raster we accept while keeping f + q^2 exact in a double.
constexpr double kFar = 1e13;

// 1D squared distance transform of a sampled function: lower envelope of the
// parabolas (q - p)^2 + f(p). Inputs are integers held in doubles.
void distance_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<std::size_t>& v,
                 std::vector<double>& z) {
    const std::size_t n = f.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    v.assign(n, 0);
    z.assign(n + 1, 0.0);
    d.assign(n, 0.0);
    auto sq = [](double a) { return a * a; };
    std::size_t k = 0;
    z[0] = -inf;
    z[1] = inf;
    for (std::size_t q = 1; q < n; ++q) {
        const double qd = static_cast<double>(q);
        double s;
        for (;;) {
            const double p = static_cast<double>(v[k]);
            s = ((f[q] + sq(qd)) - (f[v[k]] + sq(p))) / (2.0 * qd - 2.0 * p);
            if (s > z[k] || k == 0) break;
            --k;
        }
        if (k == 0 && s <= z[0]) {
            v[0] = q;
            continue;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = inf;
    }
    k = 0;
    for (std::size_t q = 0; q < n; ++q) {
        while (z[k + 1] < static_cast<double>(q)) ++k;
        const double diff = static_cast<double>(q) - static_cast<double>(v[k]);
        d[q] = diff * diff + f[v[k]];
    }
}

void require_foreground(const BinaryImage& img) {
    if (img.mask.size() != img.width * img.height)
        throw Error(ErrorKind::InvalidArgument, "mask size does not match width * height");
    if (img.foreground_count() == 0) throw Error(ErrorKind::EmptyForeground, "image has no foreground pixels");
}

}  // namespace

LevelSetField arrival_times(const BinaryImage& img) {
    require_foreground(img);
    const std::size_t w = img.width;
    const std::size_t h = img.height;
    if (w > 100000 || h > 100000) throw Error(ErrorKind::InvalidArgument, "image too large");
    std::vector<double> sqdist(w * h);
    std::vector<double> f, d, z;
    std::vector<std::size_t> v;

    // columns
    f.resize(h);
    for (std::size_t x = 0; x < w; ++x) {
        for (std::size_t y = 0; y < h; ++y) f[y] = img.at(x, y) ? 0.0 : kFar;
        distance_1d(f, d, v, z);
        for (std::size_t y = 0; y < h; ++y) sqdist[y * w + x] = d[y];
    }
    // rows
    f.resize(w);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) f[x] = sqdist[y * w + x];
        distance_1d(f, d, v, z);
        for (std::size_t x = 0; x < w; ++x) sqdist[y * w + x] = d[x];
    }

    LevelSetField field{w, h, std::vector<double>(w * h)};
    for (std::size_t i = 0; i < sqdist.size(); ++i) field.arrival[i] = std::sqrt(sqdist[i]);
    return field;
}

FilteredComplex levelset_complex(const LevelSetField& field, double speed) {
    if (!(speed > 0.0)) throw Error(ErrorKind::InvalidArgument, "front speed must be > 0");
    const std::size_t w = field.width;
    const std::size_t h = field.height;
    auto value = [&](std::size_t id) { return field.arrival[id] / speed; };
    auto id = [w](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * w + x); };

    // Every simplex enters at the max of its vertex values, so faces always
    // precede cofaces and unchecked insertion is safe.
    FilteredComplex complex;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) complex.add_unchecked(Simplex{id(x, y)}, value(id(x, y)));
    auto edge = [&](VertexId a, VertexId b) { complex.add_unchecked(Simplex{a, b}, std::max(value(a), value(b))); };
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            if (x + 1 < w) edge(id(x, y), id(x + 1, y));
            if (y + 1 < h) edge(id(x, y), id(x, y + 1));
            if (x + 1 < w && y + 1 < h) edge(id(x, y), id(x + 1, y + 1));
        }
    for (std::size_t y = 0; y + 1 < h; ++y)
        for (std::size_t x = 0; x + 1 < w; ++x) {
            VertexId a = id(x, y), b = id(x + 1, y), c = id(x, y + 1), d = id(x + 1, y + 1);
            complex.add_unchecked(Simplex{a, b, d}, std::max({value(a), value(b), value(d)}));
            complex.add_unchecked(Simplex{a, c, d}, std::max({value(a), value(c), value(d)}));
        }
    return complex;
}

FilteredComplex levelset_complex(const BinaryImage& img) {
    return levelset_complex(arrival_times(img), 1.0);
}

namespace {

// Reads one header token, skipping whitespace and '#' comments.
std::string header_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            if (!tok.empty()) break;
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw Error(ErrorKind::Parse, "truncated PNM header");
    return tok;
}

std::size_t header_number(std::istream& in) {
    std::string tok = header_token(in);
    if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error(ErrorKind::Parse, "bad PNM header value '" + tok + "'");
    return static_cast<std::size_t>(std::stoull(tok));
}

}  // namespace

PnmImage read_pnm(std::istream& in) {
    const std::string magic = header_token(in);
    if (magic != "P1" && magic != "P2" && magic != "P4" && magic != "P5")
        throw Error(ErrorKind::Parse, "unsupported image format '" + magic + "' (need P1, P2, P4 or P5)");
    const std::size_t w = header_number(in);
    const std::size_t h = header_number(in);
    if (w == 0 || h == 0) throw Error(ErrorKind::Parse, "image has zero size");
    PnmImage out;

    if (magic == "P1") {
        out.is_bitmap = true;
        out.bitmap = BinaryImage(w, h);
        for (std::size_t i = 0; i < w * h; ++i) {
            int c;
            do {
                c = in.get();
                if (c == '#')
                    while (c != EOF && c != '\n') c = in.get();
            } while (c != EOF && c != '0' && c != '1');
            if (c == EOF) throw Error(ErrorKind::Parse, "truncated P1 raster");
            out.bitmap.mask[i] = c == '1' ? 1 : 0;
        }
        return out;
    }
    if (magic == "P4") {
        out.is_bitmap = true;
        out.bitmap = BinaryImage(w, h);
        const std::size_t row_bytes = (w + 7) / 8;
        std::vector<unsigned char> row(row_bytes);
        for (std::size_t y = 0; y < h; ++y) {
            if (!in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row_bytes)))
                throw Error(ErrorKind::Parse, "truncated P4 raster");
            for (std::size_t x = 0; x < w; ++x) out.bitmap.set(x, y, (row[x / 8] >> (7 - x % 8)) & 1);
        }
        return out;
    }

    const std::size_t maxval = header_number(in);
    if (maxval == 0 || maxval > 65535) throw Error(ErrorKind::Parse, "PGM maxval must be in 1..65535");
    out.graymap = GrayImage(w, h);
    auto scale = [maxval](std::size_t v) {
        if (v > maxval) throw Error(ErrorKind::Parse, "PGM sample exceeds maxval");
        return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
    };
    if (magic == "P2") {
        for (std::size_t i = 0; i < w * h; ++i) out.graymap.pixels[i] = scale(header_number(in));
        return out;
    }
    // header_token already consumed the single whitespace before the raster
    const std::size_t bytes = maxval < 256 ? 1 : 2;
    std::vector<unsigned char> raster(w * h * bytes);
    if (!in.read(reinterpret_cast<char*>(raster.data()), static_cast<std::streamsize>(raster.size())))
        throw Error(ErrorKind::Parse, "truncated P5 raster");
    for (std::size_t i = 0; i < w * h; ++i) {
        std::size_t v = bytes == 1 ? raster[i] : (std::size_t{raster[2 * i]} << 8) | raster[2 * i + 1];
        out.graymap.pixels[i] = scale(v);
    }
    return out;
}

void write_pbm(std::ostream& out, const BinaryImage& img) {
    std::ostringstream s;
    s << "P1\n" << img.width << ' ' << img.height << '\n';
    for (std::size_t y = 0; y < img.height; ++y) {
        for (std::size_t x = 0; x < img.width; ++x) {
            if (x) s << ' ';
            s << (img.at(x, y) ? '1' : '0');
        }
        s << '\n';
    }
    out << s.str();
}

void write_pgm(std::ostream& out, const GrayImage& img) {
    std::ostringstream s;
    s << "P2\n" << img.width << ' ' << img.height << "\n255\n";
    for (std::size_t y = 0; y < img.height; ++y) {
        for (std::size_t x = 0; x < img.width; ++x) {
            if (x) s << ' ';
            s << static_cast<int>(img.at(x, y));
        }
        s << '\n';
    }
    out << s.str();
}

}  // namespace sph
