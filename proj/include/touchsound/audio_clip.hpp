#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace touchsound {

// Mono sample sequence. Samples are dimensionless amplitudes, nominally in
// [-1, 1]; processing keeps them in double and WAV I/O converts at the edges.
struct AudioClip {
    std::vector<double> samples;
    int sample_rate_hz = 44100;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

// The six touch interaction categories. Ordinal order is fixed: it defines
// model output units and confusion-matrix rows.
enum class TouchLabel : int {
    Knock = 0,
    Tap = 1,
    Rub = 2,
    Stroke = 3,
    Scratch = 4,
    Press = 5,
};

inline constexpr int kNumLabels = 6;

inline constexpr std::array<TouchLabel, kNumLabels> kAllLabels = {
    TouchLabel::Knock, TouchLabel::Tap,     TouchLabel::Rub,
    TouchLabel::Stroke, TouchLabel::Scratch, TouchLabel::Press,
};

std::string to_string(TouchLabel label);

// Throws UnknownLabel for anything outside the six names.
TouchLabel parse_label(std::string_view name);

inline int label_index(TouchLabel label) { return static_cast<int>(label); }

}  // namespace touchsound
