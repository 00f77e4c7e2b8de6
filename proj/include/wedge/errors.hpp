#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wedge
{
// Base class for every failure this library reports deliberately.
class Error : public std::runtime_error
{
public:
  explicit Error(std::string const & msg) : std::runtime_error(msg) {}
};

// Input is malformed before any geometry runs: unreadable file, unknown
// distribution name, parameter out of range.
class InvalidInput : public Error
{
public:
  using Error::Error;
};

// Wedge construction from coincident or collinear defining points.
class DegenerateWedge : public Error
{
public:
  using Error::Error;
};

// Fewer than three input points where a hull is required.
class TooFewPoints : public Error
{
public:
  using Error::Error;
};

// Duplicate points, or a collinear triple lying on the hull boundary.
// Carries the offending indices for diagnostics.
class GeneralPositionViolation : public Error
{
public:
  GeneralPositionViolation(std::string const & msg, std::vector<int> indices)
      : Error(with_indices(msg, indices)), m_indices(std::move(indices))
  {
  }

  std::vector<int> const & indices() const { return m_indices; }

private:
  static std::string with_indices(std::string const & msg, std::vector<int> const & idx)
  {
    std::string out = msg + " (indices";
    for (int i : idx) out += ' ' + std::to_string(i);
    return out + ')';
  }

  std::vector<int> m_indices;
};

// The support vertex opposite the wedge apex coincides with a contact
// point, so the standard three-anchor frame cannot be formed.
class DegenerateBaseline : public Error
{
public:
  using Error::Error;
};

// A point fell outside all three anchor wedges during assignment.
class CoverageViolation : public Error
{
public:
  using Error::Error;
};

// An iterative solver failed to reach its required accuracy.
class ConvergenceFailure : public Error
{
public:
  using Error::Error;
};

// Mismatched array lengths between points and wedges.
class SizeMismatch : public Error
{
public:
  using Error::Error;
};

// A postcondition the construction guarantees was observed to fail.
class InternalError : public Error
{
public:
  using Error::Error;
};
}  // namespace wedge
