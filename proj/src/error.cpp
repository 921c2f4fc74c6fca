#include "rsc/error.hpp"

namespace rsc {

UnsupportedGroupError::UnsupportedGroupError(std::size_t n)
  : DomainError("S_" + std::to_string(n) +
                " is not supported: the classification assumes n != 6 "
                "(S_6 has outer automorphisms)"),
    n_(n) {}

ParseError::ParseError(const std::string& what, std::size_t position)
  : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
    position_(position), detail_(what) {}

} // namespace rsc
