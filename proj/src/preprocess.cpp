#include "touchsound/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "touchsound/errors.hpp"

namespace touchsound {
namespace {

// Kahan-compensated mean
double mean_of(const std::vector<double>& x) {
    double sum = 0.0, comp = 0.0;
    for (double v : x) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(x.size());
}

std::vector<double> frame_rms(const std::vector<double>& x, size_t frame_len) {
    const size_t n_frames = (x.size() + frame_len - 1) / frame_len;
    std::vector<double> rms(n_frames);
    for (size_t f = 0; f < n_frames; ++f) {
        const size_t begin = f * frame_len;
        const size_t end = std::min(begin + frame_len, x.size());
        double acc = 0.0;
        for (size_t i = begin; i < end; ++i) acc += x[i] * x[i];
        rms[f] = std::sqrt(acc / static_cast<double>(end - begin));
    }
    return rms;
}

}  // namespace

AudioClip remove_dc(AudioClip clip) {
    if (clip.empty()) throw InvalidConfig("remove_dc: empty clip");
    const double mean = mean_of(clip.samples);
    for (double& s : clip.samples) s -= mean;
    return clip;
}

std::vector<BiquadCoefficients> design_highpass(const FilterSpec& spec, int sample_rate_hz) {
    if (spec.order != 2 && spec.order != 4 && spec.order != 8) {
        throw InvalidConfig("filter order must be 2, 4 or 8, got " + std::to_string(spec.order));
    }
    const double nyquist = sample_rate_hz / 2.0;
    if (!(spec.cutoff_hz > 0.0) || spec.cutoff_hz >= nyquist) {
        throw InvalidCutoff("cutoff " + std::to_string(spec.cutoff_hz) +
                            " Hz outside (0, " + std::to_string(nyquist) + ")");
    }

    // Each conjugate pole pair of the analog Butterworth prototype becomes one
    // digital biquad with Q = 1 / (2 cos theta_i). The section formulas are
    // the bilinear transform of the analog high-pass with the corner
    // pre-warped so the cascade is exactly -3 dB at cutoff_hz.
    const double w0 = 2.0 * std::numbers::pi * spec.cutoff_hz / sample_rate_hz;
    const double cw = std::cos(w0);
    const double sw = std::sin(w0);

    std::vector<BiquadCoefficients> cascade;
    const int sections = spec.order / 2;
    cascade.reserve(sections);
    for (int i = 0; i < sections; ++i) {
        const double theta = std::numbers::pi * (2.0 * i + 1.0) / (2.0 * spec.order);
        const double q = 1.0 / (2.0 * std::cos(theta));
        const double alpha = sw / (2.0 * q);
        const double a0 = 1.0 + alpha;

        BiquadCoefficients c;
        c.b0 = (1.0 + cw) / 2.0 / a0;
        c.b1 = -(1.0 + cw) / a0;
        c.b2 = (1.0 + cw) / 2.0 / a0;
        c.a1 = -2.0 * cw / a0;
        c.a2 = (1.0 - alpha) / a0;
        cascade.push_back(c);
    }
    return cascade;
}

AudioClip apply_filter(AudioClip clip, std::span<const BiquadCoefficients> cascade) {
    for (const auto& c : cascade) {
        double s1 = 0.0, s2 = 0.0;
        for (double& x : clip.samples) {
            const double y = c.b0 * x + s1;
            s1 = c.b1 * x - c.a1 * y + s2;
            s2 = c.b2 * x - c.a2 * y;
            x = y;
        }
    }
    return clip;
}

AudioClip trim_silence(AudioClip clip, const TrimConfig& config) {
    if (clip.empty()) throw InvalidConfig("trim_silence: empty clip");
    const auto frame_len = static_cast<size_t>(
        std::max(1.0, std::round(config.frame_ms * clip.sample_rate_hz / 1000.0)));

    const std::vector<double> rms = frame_rms(clip.samples, frame_len);
    const double peak_rms = *std::max_element(rms.begin(), rms.end());
    const double gate = peak_rms * std::pow(10.0, config.threshold_db / 20.0);

    size_t first = rms.size(), last = 0;
    for (size_t f = 0; f < rms.size(); ++f) {
        if (rms[f] > gate) {
            if (first == rms.size()) first = f;
            last = f;
        }
    }
    if (first == rms.size()) throw EmptyAfterTrim("no frame above silence gate");

    const size_t begin = first * frame_len;
    const size_t end = std::min((last + 1) * frame_len, clip.samples.size());
    clip.samples = std::vector<double>(clip.samples.begin() + static_cast<ptrdiff_t>(begin),
                                       clip.samples.begin() + static_cast<ptrdiff_t>(end));
    return clip;
}

AudioClip normalize_peak(AudioClip clip, bool* degenerate) {
    if (clip.empty()) throw InvalidConfig("normalize_peak: empty clip");
    double peak = 0.0;
    for (double s : clip.samples) peak = std::max(peak, std::abs(s));
    if (degenerate) *degenerate = (peak == 0.0);
    if (peak == 0.0) return clip;
    for (double& s : clip.samples) s /= peak;
    return clip;
}

AudioClip preprocess_pipeline(AudioClip clip, const PreprocessConfig& config) {
    const auto cascade = design_highpass(config.filter, clip.sample_rate_hz);
    clip = remove_dc(std::move(clip));
    clip = trim_silence(std::move(clip), config.trim);
    clip = apply_filter(std::move(clip), cascade);
    return normalize_peak(std::move(clip));
}

}  // namespace touchsound
