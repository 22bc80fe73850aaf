#pragma once

#include <stdexcept>
#include <string>

namespace dle {

// Thrown when a formula with an (omega - E0) denominator is evaluated too
// close to the qubit transition frequency. The message names the offending
// parameter.
class NearResonanceError : public std::runtime_error {
public:
    explicit NearResonanceError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public std::logic_error {
public:
    explicit DimensionMismatchError(const std::string& what) : std::logic_error(what) {}
};

// Dressed-state identification could not find an eigenvector with bare
// overlap above 1/sqrt(2) (resonance or strong coupling).
class AssignmentFailedError : public std::runtime_error {
public:
    explicit AssignmentFailedError(const std::string& what) : std::runtime_error(what) {}
};

class NotConvergedError : public std::runtime_error {
public:
    explicit NotConvergedError(const std::string& what) : std::runtime_error(what) {}
};

// Population reached the top Fock layer during time evolution; results past
// this point would be truncation artifacts.
class CutoffLeakageError : public std::runtime_error {
public:
    explicit CutoffLeakageError(const std::string& what) : std::runtime_error(what) {}
};

class StepSizeUnderflowError : public std::runtime_error {
public:
    explicit StepSizeUnderflowError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dle
