#pragma once

#include <stdexcept>
#include <string>

namespace congsweep {

struct NotInvertible : std::domain_error {
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct NotCoprime : std::domain_error {
  explicit NotCoprime(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct ModulusMismatch : std::invalid_argument {
  explicit ModulusMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotApplicable : std::domain_error {
  explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

struct LowerParameterPole : std::domain_error {
  explicit LowerParameterPole(const std::string& what) : std::domain_error(what) {}
};

struct OracleBoundExceeded : std::domain_error {
  explicit OracleBoundExceeded(const std::string& what) : std::domain_error(what) {}
};

struct InvalidConfig : std::invalid_argument {
  explicit InvalidConfig(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidGrid : std::invalid_argument {
  explicit InvalidGrid(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace congsweep
