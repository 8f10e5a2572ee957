#pragma once

#include <stdexcept>
#include <string>

namespace touchsound {

// Base class for all library errors. Catching this at the CLI boundary
// maps every data problem to one exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// WAV I/O
class MalformedWav : public Error {
public:
    using Error::Error;
};
class UnsupportedFormat : public Error {
public:
    using Error::Error;
};
class IoFailure : public Error {
public:
    using Error::Error;
};

// Manifest
class ParseError : public Error {
public:
    using Error::Error;
};
class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label)
        : Error("unknown touch label: \"" + label + "\""), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// Preprocessing
class InvalidCutoff : public Error {
public:
    using Error::Error;
};
class EmptyAfterTrim : public Error {
public:
    using Error::Error;
};
class InvalidConfig : public Error {
public:
    using Error::Error;
};

// Spectrogram / features
class DegenerateAllZero : public Error {
public:
    using Error::Error;
};

// Model
class ShapeMismatch : public Error {
public:
    using Error::Error;
};
class BadMagic : public Error {
public:
    using Error::Error;
};
class VersionMismatch : public Error {
public:
    using Error::Error;
};
class SizeMismatch : public Error {
public:
    using Error::Error;
};

// Dataset / evaluation
class EmptySplit : public Error {
public:
    using Error::Error;
};
class ClassTooSmall : public Error {
public:
    using Error::Error;
};

}  // namespace touchsound
