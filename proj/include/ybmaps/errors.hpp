#pragma once

#include <stdexcept>
#include <string>

namespace ybmaps {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// A declared denominator polynomial of a map vanished at the input point.
struct SingularLocus : Error {
    std::string guard;
    explicit SingularLocus(std::string g)
        : Error("singular locus: " + g + " = 0"), guard(std::move(g)) {}
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& kind, const std::string& name)
        : Error("unknown " + kind + ": " + name) {}
};

struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& what) : Error("sampling exhausted: " + what) {}
};

struct ComplexRoots : Error {
    ComplexRoots() : Error("quadratic constraint has complex roots") {}
};

struct DegenerateConstraint : Error {
    DegenerateConstraint() : Error("constraint degenerates to a contradiction") {}
};

struct NearSingularAbort : Error {
    long last_good_step;
    explicit NearSingularAbort(long step, const std::string& guard)
        : Error("orbit approached singular locus (" + guard + ") after step " +
                std::to_string(step)),
          last_good_step(step) {}
};

}  // namespace ybmaps
