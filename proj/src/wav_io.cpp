#include "touchsound/wav_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "touchsound/errors.hpp"

namespace touchsound {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

struct FmtChunk {
    uint16_t audio_format = 0;
    uint16_t num_channels = 0;
    uint32_t sample_rate = 0;
    uint16_t bits_per_sample = 0;
};

uint32_t read_u32le(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16le(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | p[1] << 8);
}

float read_f32le(const uint8_t* p) {
    const uint32_t bits = read_u32le(p);
    return std::bit_cast<float>(bits);
}

void append_u16le(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void append_u32le(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
}

void append_tag(std::vector<uint8_t>& out, const char tag[4]) {
    out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioClip read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());

    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw IoFailure("read failed: " + path.string());

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw MalformedWav("not a RIFF/WAVE file: " + path.string());
    }

    FmtChunk fmt;
    bool have_fmt = false;
    bool have_data = false;
    const uint8_t* data = nullptr;
    size_t data_size = 0;

    // Walk the chunk list; unknown chunks are skipped. Chunk bodies are
    // word-aligned, so odd sizes carry one pad byte.
    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const uint8_t* hdr = bytes.data() + pos;
        const uint32_t chunk_size = read_u32le(hdr + 4);
        const size_t body = pos + 8;
        if (body + chunk_size > bytes.size()) {
            throw MalformedWav("chunk overruns file: " + path.string());
        }
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw MalformedWav("fmt chunk too small: " + path.string());
            const uint8_t* p = bytes.data() + body;
            fmt.audio_format = read_u16le(p);
            fmt.num_channels = read_u16le(p + 2);
            fmt.sample_rate = read_u32le(p + 4);
            fmt.bits_per_sample = read_u16le(p + 14);
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            data = bytes.data() + body;
            data_size = chunk_size;
            have_data = true;
        }
        pos = body + chunk_size + (chunk_size & 1);
    }

    if (!have_fmt) throw MalformedWav("missing fmt chunk: " + path.string());
    if (!have_data) throw MalformedWav("missing data chunk: " + path.string());

    if (fmt.audio_format != kFormatPcm && fmt.audio_format != kFormatIeeeFloat) {
        throw UnsupportedFormat("unsupported audio format tag " +
                                std::to_string(fmt.audio_format) + ": " + path.string());
    }
    const bool is_float = fmt.audio_format == kFormatIeeeFloat;
    if ((is_float && fmt.bits_per_sample != 32) || (!is_float && fmt.bits_per_sample != 16)) {
        throw UnsupportedFormat("unsupported bit depth " +
                                std::to_string(fmt.bits_per_sample) + ": " + path.string());
    }
    if (fmt.num_channels != 1 && fmt.num_channels != 2) {
        throw UnsupportedFormat("unsupported channel count " +
                                std::to_string(fmt.num_channels) + ": " + path.string());
    }
    if (fmt.sample_rate < 8000) {
        throw UnsupportedFormat("sample rate below 8 kHz: " + path.string());
    }

    const size_t bytes_per_sample = fmt.bits_per_sample / 8;
    const size_t frame_size = bytes_per_sample * fmt.num_channels;
    if (data_size % frame_size != 0) {
        throw MalformedWav("data chunk size is not a whole number of frames: " + path.string());
    }
    const size_t num_frames = data_size / frame_size;

    AudioClip clip;
    clip.sample_rate_hz = static_cast<int>(fmt.sample_rate);
    clip.samples.resize(num_frames);

    for (size_t i = 0; i < num_frames; ++i) {
        double acc = 0.0;
        for (uint16_t ch = 0; ch < fmt.num_channels; ++ch) {
            const uint8_t* p = data + (i * fmt.num_channels + ch) * bytes_per_sample;
            if (is_float) {
                acc += static_cast<double>(read_f32le(p));
            } else {
                const auto v = static_cast<int16_t>(read_u16le(p));
                acc += v / 32768.0;
            }
        }
        clip.samples[i] = acc / fmt.num_channels;
    }
    return clip;
}

void write_wav(const AudioClip& clip, const std::filesystem::path& path, int bit_depth) {
    if (bit_depth != 16 && bit_depth != 32) {
        throw InvalidConfig("bit depth must be 16 or 32, got " + std::to_string(bit_depth));
    }
    for (double s : clip.samples) {
        if (!std::isfinite(s)) throw InvalidConfig("non-finite sample in clip");
    }

    const uint16_t format = bit_depth == 32 ? kFormatIeeeFloat : kFormatPcm;
    const uint32_t bytes_per_sample = static_cast<uint32_t>(bit_depth) / 8;
    const uint32_t data_size = static_cast<uint32_t>(clip.samples.size()) * bytes_per_sample;

    std::vector<uint8_t> out;
    out.reserve(64 + data_size);
    append_tag(out, "RIFF");
    append_u32le(out, 0);  // patched below
    append_tag(out, "WAVE");

    append_tag(out, "fmt ");
    append_u32le(out, 16);
    append_u16le(out, format);
    append_u16le(out, 1);  // mono
    append_u32le(out, static_cast<uint32_t>(clip.sample_rate_hz));
    append_u32le(out, static_cast<uint32_t>(clip.sample_rate_hz) * bytes_per_sample);
    append_u16le(out, static_cast<uint16_t>(bytes_per_sample));
    append_u16le(out, static_cast<uint16_t>(bit_depth));

    if (format == kFormatIeeeFloat) {
        // fact chunk is expected for non-PCM formats
        append_tag(out, "fact");
        append_u32le(out, 4);
        append_u32le(out, static_cast<uint32_t>(clip.samples.size()));
    }

    append_tag(out, "data");
    append_u32le(out, data_size);

    if (bit_depth == 32) {
        for (double s : clip.samples) {
            append_u32le(out, std::bit_cast<uint32_t>(static_cast<float>(s)));
        }
    } else {
        constexpr double kMax16 = 1.0 - 1.0 / 32768.0;
        for (double s : clip.samples) {
            const double clamped = std::min(kMax16, std::max(-1.0, s));
            const auto q = static_cast<int16_t>(std::lrint(clamped * 32768.0));
            append_u16le(out, static_cast<uint16_t>(q));
        }
    }

    const uint32_t riff_size = static_cast<uint32_t>(out.size()) - 8;
    out[4] = static_cast<uint8_t>(riff_size & 0xFF);
    out[5] = static_cast<uint8_t>((riff_size >> 8) & 0xFF);
    out[6] = static_cast<uint8_t>((riff_size >> 16) & 0xFF);
    out[7] = static_cast<uint8_t>((riff_size >> 24) & 0xFF);

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot open for writing: " + path.string());
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw IoFailure("write failed: " + path.string());
}

}  // namespace touchsound
