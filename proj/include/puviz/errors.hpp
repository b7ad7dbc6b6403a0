#pragma once

#include <stdexcept>
#include <string>

#include "puviz/colorspace.hpp"

namespace puviz {

// Every error category carries a stable process exit code so the CLI can
// map failures to distinct statuses (see README).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const noexcept { return 1; }
};

// A precondition on user-supplied values was violated (ranges, shapes, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

// A color left the sRGB gamut under GamutPolicy::Error.
class GamutError : public Error {
public:
    GamutError(const std::string& context, const LabColor& lab, const SrgbColor& rgb);
    const LabColor& offending_lab() const noexcept { return lab_; }
    const SrgbColor& offending_srgb() const noexcept { return rgb_; }
    int exit_code() const noexcept override { return 3; }

private:
    LabColor lab_;
    SrgbColor rgb_;
};

// File content could not be interpreted (bad header, ragged CSV, truncated
// payload, non-finite sample, ...). Messages carry offsets or line numbers.
class LoadError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 5; }
};

// The requested quantity is undefined for this input (zero-magnitude wheel,
// zero-length colormap, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 6; }
};

} // namespace puviz
