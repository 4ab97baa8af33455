#pragma once

#include <stdexcept>
#include <string>

namespace hfnoise {

// Base class for all library errors. Subclasses map 1:1 onto the failure
// categories surfaced by the CLI exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Too few observations to compute anything meaningful.
class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

// Structurally invalid input: non-finite values, non-increasing times, etc.
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& msg) : Error(msg) {}
};

// Input is valid but lies on a degenerate boundary (all-zero variances, ...).
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// Optimizer or recursion produced non-finite intermediate values.
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

// Option combination has no defined result (e.g. TSRV K=1 with adjustment).
class InvalidOptions : public Error {
public:
    explicit InvalidOptions(const std::string& msg) : Error(msg) {}
};

// File does not match the expected schema (header, key set, cell keys).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// A data row failed to parse; carries the 1-based line number.
class RowError : public Error {
public:
    RowError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Design matrix is rank deficient; message names the dependent columns.
class RankError : public Error {
public:
    explicit RankError(const std::string& msg) : Error(msg) {}
};

// Clustered covariance requested with fewer than two clusters.
class DegenerateClustering : public Error {
public:
    explicit DegenerateClustering(const std::string& msg) : Error(msg) {}
};

// Every path in a Monte Carlo cell failed estimation.
class CellFailed : public Error {
public:
    explicit CellFailed(const std::string& msg) : Error(msg) {}
};

}  // namespace hfnoise
