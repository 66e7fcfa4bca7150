#pragma once

#include <stdexcept>
#include <string>

namespace dnb {

enum class Errc {
    InvalidArgument = 1,
    DuplicateAngle,
    InvalidMultiplicity,
    NonRealSymbol,
    OutOfClass,
    SizeTooSmall,
    DimensionMismatch,
    NoConvergence,
    KernelMismatch,
    DuplicateNode,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the core carries one of the codes above; the C API
// maps them one-to-one onto dnb_status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace dnb
