#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

// Base class for every domain error thrown by this library. Callers that
// only care about "geometry rejected the input" can catch this one type.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateBase : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NonPositiveLength : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ApexAtBaseVertex : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InconsistentDistances : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class CoplanarApex : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotAcuteBase : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateSlice : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class HeightNonPositive : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NonSmoothPoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotOnCylinder : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PointOnChordEndpoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class EmptyCurve : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class EmptyRegion : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class MeshToleranceUnreachable : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class SolverNonConvergence : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace tetra
