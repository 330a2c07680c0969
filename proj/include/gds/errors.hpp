#ifndef GDS_ERRORS_HPP
#define GDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gds
{

/// Malformed user input: bad permutation, unparsable group file, unknown builtin.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded. The message names the cap.
class CapacityError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid request (non-normal quotient, invalid family parameter, ...).
class DomainError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace gds

#endif // GDS_ERRORS_HPP
