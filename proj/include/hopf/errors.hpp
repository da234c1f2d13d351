#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Step-size control of the flow integrator broke down.
class IntegratorError : public Error {
 public:
  using Error::Error;
};

class DerivativeOrderError : public Error {
 public:
  using Error::Error;
};

// |g(0)| exceeds the tolerance, so f - f o gamma = g has no smooth solution.
class NecessaryConditionViolated : public Error {
 public:
  using Error::Error;
};

class LipschitzEstimateFailed : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hopf
