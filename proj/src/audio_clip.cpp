#include "touchsound/audio_clip.hpp"

#include "touchsound/errors.hpp"

namespace touchsound {

std::string to_string(TouchLabel label) {
    switch (label) {
        case TouchLabel::Knock: return "Knock";
        case TouchLabel::Tap: return "Tap";
        case TouchLabel::Rub: return "Rub";
        case TouchLabel::Stroke: return "Stroke";
        case TouchLabel::Scratch: return "Scratch";
        case TouchLabel::Press: return "Press";
    }
    return "?";
}

TouchLabel parse_label(std::string_view name) {
    for (TouchLabel label : kAllLabels) {
        if (name == to_string(label)) return label;
    }
    throw UnknownLabel(std::string(name));
}

}  // namespace touchsound
