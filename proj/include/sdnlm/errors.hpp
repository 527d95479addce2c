#ifndef SDNLM_ERRORS_HPP
#define SDNLM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdnlm {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : DomainError {
    explicit SingularMatrix(const std::string& what) : DomainError(what) {}
};

struct DegenerateSample : DomainError {
    explicit DegenerateSample(const std::string& what) : DomainError(what) {}
};

struct ZeroVariance : DomainError {
    explicit ZeroVariance(const std::string& what) : DomainError(what) {}
};

struct DegenerateRange : DomainError {
    explicit DegenerateRange(const std::string& what) : DomainError(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CorruptHeader : std::runtime_error {
    explicit CorruptHeader(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteValue : std::runtime_error {
    explicit NonFiniteValue(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sdnlm

#endif
