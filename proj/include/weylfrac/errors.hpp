#pragma once

#include <stdexcept>
#include <string>

namespace weylfrac {

// Thrown when a verified-by-construction identity fails. Seeing one of these
// means a bug in this library, not bad input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace weylfrac
