#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballpark {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input point set") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class DegenerateSimplex : public Error {
public:
    explicit DegenerateSimplex(const std::string& what) : Error(what) {}
};

class DegenerateSupport : public Error {
public:
    DegenerateSupport() : Error("support points are affinely dependent") {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

class DegenerateHull : public Error {
public:
    explicit DegenerateHull(const std::string& what) : Error(what) {}
};

class UndefinedMeasure : public Error {
public:
    explicit UndefinedMeasure(const std::string& what) : Error(what) {}
};

class LpInfeasible : public Error {
public:
    LpInfeasible() : Error("linear program is infeasible") {}
};

class LpUnbounded : public Error {
public:
    LpUnbounded() : Error("linear program is unbounded") {}
};

class NotInHull : public Error {
public:
    explicit NotInHull(const std::string& what) : Error(what) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

class HypothesisFailed : public Error {
public:
    explicit HypothesisFailed(const std::string& what, std::vector<std::size_t> subfamily = {})
        : Error(what), subfamily_(std::move(subfamily)) {}
    const std::vector<std::size_t>& subfamily() const { return subfamily_; }

private:
    std::vector<std::size_t> subfamily_;
};

class TooFewPoints : public Error {
public:
    explicit TooFewPoints(const std::string& what) : Error(what) {}
};

class SearchFailed : public Error {
public:
    explicit SearchFailed(const std::string& what) : Error(what) {}
};

// CSV / input-file problems, with a 1-based row/column location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t column)
        : Error(what + " (row " + std::to_string(row) + ", column " + std::to_string(column) + ")"),
          row_(row), column_(column) {}
    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_ = 0;
    std::size_t column_ = 0;
};

}  // namespace ballpark
