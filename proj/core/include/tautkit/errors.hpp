#ifndef TAUTKIT_ERRORS_HPP
#define TAUTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tautkit {

/// Thrown when a computation would exceed a configured enumeration cap.
/// The message names the cap so callers can surface it.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tautkit

#endif
