#ifndef SUBISO_COMMON_HPP
#define SUBISO_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace subiso {

// Weights are arbitrary-precision: the gadget reductions scale them by 2^k
// and block-encode them, which overflows fixed-width types.
using BigInt = boost::multiprecision::cpp_int;

using Vertex = int;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a documented precondition or invariant.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

// Tensor/matrix dimensions do not line up.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// Instance exceeds a configured size guard.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

// Operation not available for this instance (e.g. weights missing).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

inline std::int64_t to_int64_checked(const BigInt& v, const char* context) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw SizeLimitError(std::string(context) + ": weight out of 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace subiso

#endif
