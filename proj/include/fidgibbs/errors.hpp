#pragma once

#include <stdexcept>
#include <string>

namespace fidgibbs {

// Error categories map onto CLI exit codes: specification/validation
// problems exit 1, resource limits exit 2, infeasible models exit 3.

class SpecificationError : public std::runtime_error {
public:
  explicit SpecificationError(const std::string& what) : std::runtime_error(what) {}
};

// An angle that must lie on the M-point grid does not.  Off-grid inputs are
// rejected, never snapped.
class GridError : public SpecificationError {
public:
  explicit GridError(const std::string& what) : SpecificationError(what) {}
};

// Cyclic or otherwise unsupported factor-graph topology.
class UnsupportedTopologyError : public SpecificationError {
public:
  explicit UnsupportedTopologyError(const std::string& what) : SpecificationError(what) {}
};

class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Every outcome has zero weight, so the distribution cannot be normalized.
class InfeasibleModelError : public std::runtime_error {
public:
  explicit InfeasibleModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fidgibbs
