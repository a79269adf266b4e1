#ifndef BETTIC_ERRORS_HPP
#define BETTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bettic {

// Thrown when a request exceeds a declared capacity (vertex budget,
// enumeration gate, permutation limit, sweep width).  The CLI maps this
// to exit code 3; ordinary range/domain errors map to exit code 2.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bettic

#endif
