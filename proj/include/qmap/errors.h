#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
   public:
    using Error::Error;
};

class NoConvergence : public Error {
   public:
    using Error::Error;
};

class NotDiagonal : public Error {
   public:
    using Error::Error;
};

/// A Choi matrix carries a nonzero entry outside the slots used by the map class.
class PatternViolation : public Error {
   public:
    PatternViolation(int row, int col, const std::string &msg) : Error(msg), row(row), col(col) {
    }
    int row;
    int col;
};

class OutOfRange : public Error {
   public:
    using Error::Error;
};

class NotUnital : public Error {
   public:
    using Error::Error;
};

class NotTracePreserving : public Error {
   public:
    using Error::Error;
};

class WrongSymmetry : public Error {
   public:
    using Error::Error;
};

class InvalidParams : public Error {
   public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
   public:
    using Error::Error;
};

class NotPositive : public Error {
   public:
    using Error::Error;
};

class Degenerate : public Error {
   public:
    using Error::Error;
};

/// An optimizer was given fewer evaluations than its mandatory phase needs.
class BudgetExhausted : public Error {
   public:
    BudgetExhausted(double best_value, const std::string &msg) : Error(msg), best_value(best_value) {
    }
    double best_value;
};

}  // namespace qmap
