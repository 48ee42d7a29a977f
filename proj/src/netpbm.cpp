#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <system_error>
#include <unistd.h>

#include "edgekit/errors.hpp"
#include "edgekit/image.hpp"

namespace edgekit {

namespace {

enum class Encoding { ascii, binary };

struct Header {
    int width = 0;
    int height = 0;
    int maxval = 0;
    int channels = 1;
    Encoding encoding = Encoding::binary;
};

// Tokenizer over the header and (for P2/P3) the sample section. '#' starts a
// comment that runs to the end of the line.
class Reader {
public:
    Reader(std::span<const std::uint8_t> bytes, const std::string& source) : bytes_(bytes), source_(source) {}

    std::span<const std::uint8_t> rest() const noexcept { return bytes_.subspan(pos_); }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Empty result means end of input.
    std::string token() {
        skip_space_and_comments();
        std::string out;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
            out.push_back(static_cast<char>(bytes_[pos_++]));
        }
        return out;
    }

    long header_int(std::string_view what, long lo, long hi) {
        const std::string tok = token();
        if (tok.empty()) {
            throw FormatError(source_ + ": missing " + std::string(what) + " in header");
        }
        long value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9' || value > hi) {
                throw FormatError(source_ + ": malformed " + std::string(what) + " token '" + tok + "'");
            }
            value = value * 10 + (c - '0');
        }
        if (value < lo || value > hi) {
            throw FormatError(source_ + ": " + std::string(what) + " token '" + tok + "' out of range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from binary samples.
    void single_whitespace() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError(source_ + ": expected a single whitespace byte after maxval");
        }
        ++pos_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    const std::string& source_;
    std::size_t pos_ = 0;
};

Header read_header(Reader& in, const std::string& source) {
    const std::string magic = in.token();
    Header h;
    if (magic == "P2" || magic == "P5") {
        h.channels = 1;
    } else if (magic == "P3" || magic == "P6") {
        h.channels = 3;
    } else {
        throw FormatError(source + ": unsupported magic number '" + magic + "'");
    }
    h.encoding = (magic == "P2" || magic == "P3") ? Encoding::ascii : Encoding::binary;
    h.width = static_cast<int>(in.header_int("width", 1, 1L << 20));
    h.height = static_cast<int>(in.header_int("height", 1, 1L << 20));
    h.maxval = static_cast<int>(in.header_int("maxval", 1, 65535));
    return h;
}

std::vector<double> read_samples(Reader& in, const Header& h, const std::string& source) {
    const std::size_t count =
        static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height) * static_cast<std::size_t>(h.channels);
    std::vector<double> samples;
    samples.reserve(count);
    const auto maxval = static_cast<double>(h.maxval);

    auto push = [&](long v, std::size_t index) {
        if (v > h.maxval) {
            throw FormatError(source + ": sample " + std::to_string(index) + " value " + std::to_string(v) +
                              " exceeds maxval " + std::to_string(h.maxval));
        }
        samples.push_back(static_cast<double>(v) / maxval);
    };

    if (h.encoding == Encoding::ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            const std::string tok = in.token();
            if (tok.empty()) {
                throw TruncationError(source + ": truncated pixel data, expected " + std::to_string(count) +
                                          " samples, got " + std::to_string(i),
                                      count, i);
            }
            long v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9' || v > 65535) {
                    throw FormatError(source + ": malformed sample token '" + tok + "'");
                }
                v = v * 10 + (c - '0');
            }
            push(v, i);
        }
        return samples;
    }

    in.single_whitespace();
    const std::size_t bytes_per_sample = h.maxval < 256 ? 1 : 2;
    const std::size_t expected = count * bytes_per_sample;
    const auto data = in.rest();
    if (data.size() < expected) {
        throw TruncationError(source + ": truncated pixel data, expected " + std::to_string(expected) +
                                  " bytes, got " + std::to_string(data.size()),
                              expected, data.size());
    }
    for (std::size_t i = 0; i < count; ++i) {
        long v = data[i * bytes_per_sample];
        if (bytes_per_sample == 2) {
            v = (v << 8) | data[i * bytes_per_sample + 1];
        }
        push(v, i);
    }
    return samples;
}

std::vector<std::uint8_t> pgm_bytes(int width, int height, std::span<const std::uint8_t> samples) {
    const std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), samples.begin(), samples.end());
    return out;
}

}  // namespace

AnyImage parse_netpbm(std::span<const std::uint8_t> bytes, const std::string& source) {
    Reader in(bytes, source);
    const Header h = read_header(in, source);
    const std::vector<double> samples = read_samples(in, h, source);
    if (h.channels == 1) {
        return GrayImage(h.width, h.height, samples);
    }
    std::vector<Rgb> rgb(samples.size() / 3);
    for (std::size_t i = 0; i < rgb.size(); ++i) {
        rgb[i] = Rgb{samples[3 * i], samples[3 * i + 1], samples[3 * i + 2]};
    }
    return RgbImage(h.width, h.height, std::move(rgb));
}

AnyImage read_image(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    if (file.bad()) {
        throw IoError("read failed for '" + path.string() + "'");
    }
    return parse_netpbm(bytes, path.string());
}

GrayImage read_gray(const std::filesystem::path& path) {
    AnyImage img = read_image(path);
    if (auto* rgb = std::get_if<RgbImage>(&img)) {
        return rgb_to_gray(*rgb);
    }
    return std::get<GrayImage>(std::move(img));
}

std::uint8_t quantize(double v) noexcept {
    if (!(v > 0.0)) {
        return 0;
    }
    if (v >= 1.0) {
        return 255;
    }
    return static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    std::vector<std::uint8_t> samples(img.size());
    std::transform(img.pixels().begin(), img.pixels().end(), samples.begin(), quantize);
    return pgm_bytes(img.width(), img.height(), samples);
}

std::vector<std::uint8_t> encode_pgm(const EdgeMap& edges) {
    std::vector<std::uint8_t> samples(edges.size());
    std::transform(edges.pixels().begin(), edges.pixels().end(), samples.begin(),
                   [](std::uint8_t v) -> std::uint8_t { return v != 0 ? 255 : 0; });
    return pgm_bytes(edges.width(), edges.height(), samples);
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        file.close();
        if (!file) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("write failed for '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

void write_image(const GrayImage& img, const std::filesystem::path& path) {
    write_file_atomic(path, encode_pgm(img));
}

void write_image(const EdgeMap& edges, const std::filesystem::path& path) {
    write_file_atomic(path, encode_pgm(edges));
}

}  // namespace edgekit
