#pragma once

#include <stdexcept>
#include <string>

namespace grasp {

struct GraspError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction
struct CycleDetected : GraspError {
    using GraspError::GraspError;
};
struct VertexOutOfRange : GraspError {
    using GraspError::GraspError;
};
struct SelfLoop : GraspError {
    using GraspError::GraspError;
};

// queries
struct InvalidQuery : GraspError {
    using GraspError::GraspError;
};
struct TooLarge : GraspError {
    using GraspError::GraspError;
};
struct NonUniqueBoundary : GraspError {
    using GraspError::GraspError;
};

// data and scoring
struct DegenerateData : GraspError {
    using GraspError::GraspError;
};
struct SingularParentMatrix : GraspError {
    using GraspError::GraspError;
};
struct DimensionMismatch : GraspError {
    using GraspError::GraspError;
};

// search
struct OrderViolation : GraspError {
    using GraspError::GraspError;
};

// file formats
struct ParseError : GraspError {
    using GraspError::GraspError;
};

} // namespace grasp
