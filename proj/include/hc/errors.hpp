#pragma once

#include <stdexcept>
#include <string>

namespace hc {

// Base class of every error the library raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A scalar function was evaluated on a forbidden difference (pole hit).
// Distinguishes "degenerate input" from "value is zero".
class DivisionByCoincidence : public Error {
public:
    DivisionByCoincidence(const std::string& fn, const std::string& x, const std::string& y)
        : Error("pole of " + fn + " hit at (" + x + ", " + y + ")") {}
    explicit DivisionByCoincidence(const std::string& msg) : Error(msg) {}
};

class ArithmeticError : public Error {
public:
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class SizeMismatch : public Error {
public:
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

class DegeneratePoint : public Error {
public:
    explicit DegeneratePoint(const std::string& msg) : Error(msg) {}
};

class NotBoundaryCase : public Error {
public:
    explicit NotBoundaryCase(const std::string& msg) : Error(msg) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

class SamplerExhausted : public Error {
public:
    explicit SamplerExhausted(const std::string& msg) : Error(msg) {}
};

class DegenerateSubstitution : public Error {
public:
    explicit DegenerateSubstitution(const std::string& msg) : Error(msg) {}
};

}  // namespace hc
