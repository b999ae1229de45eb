#pragma once

#include <stdexcept>
#include <string>

namespace qei {

// Invalid run description: bad model parameters, malformed config, inconsistent grids.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to meet its tolerance (quadrature panels exhausted,
// eigensolver iteration cap, non-Cauchy extrapolation). The message carries the
// achieved error estimate so the caller can judge whether to loosen settings.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qei
