#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dmk {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

class DuplicateSubset : public Error {
public:
    using Error::Error;
};

class GroundMismatch : public Error {
public:
    using Error::Error;
};

class ImproperSystem : public Error {
public:
    using Error::Error;
};

// Two provably-equivalent checkers disagreed: an implementation bug,
// never a legitimate verdict.
class OracleDisagreement : public Error {
public:
    using Error::Error;
};

class NotDeltaMatroid : public Error {
public:
    using Error::Error;
};

class SingularPivotBlock : public Error {
public:
    using Error::Error;
};

class ShapeViolation : public Error {
public:
    using Error::Error;
};

class LabelCollision : public Error {
public:
    using Error::Error;
};

class LoopRequired : public Error {
public:
    using Error::Error;
};

class LoopForbidden : public Error {
public:
    using Error::Error;
};

class OrbitTooLarge : public Error {
public:
    using Error::Error;
};

// Set system admits no symmetric GF(2) matrix; carries the first subset
// (canonical order) where the candidate graph's support disagrees.
class NotGraphic : public Error {
public:
    NotGraphic(const std::string& msg, std::vector<std::string> witness)
        : Error(msg), witness_(std::move(witness)) {}
    const std::vector<std::string>& witness() const { return witness_; }

private:
    std::vector<std::string> witness_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

}  // namespace dmk
