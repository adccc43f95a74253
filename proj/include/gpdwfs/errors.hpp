#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gpdwfs {

// Contract failures raised by constructions. Validators do not throw;
// they return Violation lists instead (see groupoid.hpp).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& what) : Error("DomainMismatch: " + what) {}
};

struct CodomainMismatch : Error {
    explicit CodomainMismatch(const std::string& what) : Error("CodomainMismatch: " + what) {}
};

struct NotACone : Error {
    explicit NotACone(const std::string& what) : Error("NotACone: " + what) {}
};

struct NotAFibration : Error {
    NotAFibration(const std::string& at_object, const std::string& arrow)
        : Error("NotAFibration: no lift of '" + arrow + "' at '" + at_object + "'"),
          object(at_object),
          base_arrow(arrow) {}
    std::string object;
    std::string base_arrow;
};

struct InvalidFibration : Error {
    explicit InvalidFibration(const std::string& what) : Error("InvalidFibration: " + what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error("PreconditionViolated: " + what) {}
};

struct NoWitness : Error {
    explicit NoWitness(const std::string& what) : Error("NoWitness: " + what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded: " + what) {}
};

// A single violated law, reported by a validator.
struct Violation {
    std::string code;    // e.g. "MissingInverse", "NonAssociative"
    std::string detail;  // human-readable, names the offending elements
};

using Violations = std::vector<Violation>;

inline std::string describe(const Violations& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += "; ";
        out += v.code + ": " + v.detail;
    }
    return out;
}

}  // namespace gpdwfs
