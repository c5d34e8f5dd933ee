#pragma once

#include <stdexcept>
#include <string>

namespace ais {

// Failure classes map to distinct CLI exit codes.
enum class ErrorClass { Config, Io, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

#define AISREC_DEFINE_ERROR(Name, Class)                        \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& msg)                   \
            : Error(ErrorClass::Class, std::string(#Name ": ") + msg) {} \
    }

AISREC_DEFINE_ERROR(ConfigError, Config);
AISREC_DEFINE_ERROR(IoError, Io);
AISREC_DEFINE_ERROR(PreconditionViolation, Numeric);

// waveguide_modes
AISREC_DEFINE_ERROR(NoTrappedModes, Numeric);
AISREC_DEFINE_ERROR(ConvergenceFailure, Numeric);

// field_synthesis
AISREC_DEFINE_ERROR(DepthOutOfRange, Numeric);
AISREC_DEFINE_ERROR(DimensionMismatch, Numeric);
AISREC_DEFINE_ERROR(CouplingOutsidePath, Numeric);

// nliw_scene
AISREC_DEFINE_ERROR(DisplacementExceedsDepth, Numeric);
AISREC_DEFINE_ERROR(SegmentTooWide, Numeric);

// dataset_gen
AISREC_DEFINE_ERROR(ZeroField, Numeric);
AISREC_DEFINE_ERROR(FormatError, Io);

// ais_analysis
AISREC_DEFINE_ERROR(GridMismatch, Numeric);
AISREC_DEFINE_ERROR(ZeroVariance, Numeric);
AISREC_DEFINE_ERROR(NoDominantSlope, Numeric);

// neural_recovery
AISREC_DEFINE_ERROR(InvalidSpec, Config);
AISREC_DEFINE_ERROR(ShapeMismatch, Numeric);
AISREC_DEFINE_ERROR(NonFiniteLoss, Numeric);

#undef AISREC_DEFINE_ERROR

} // namespace ais
