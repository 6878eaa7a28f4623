#pragma once

#include <stdexcept>
#include <string>

namespace pnideal {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// bad text / json input
class ParseError : public Error {
public:
  using Error::Error;
};

// sequent proof rule that cannot be applied
class TranslationError : public Error {
public:
  TranslationError(std::string rule_path, const std::string& what)
      : Error(rule_path + ": " + what), path_(std::move(rule_path)) {}
  const std::string& rule_path() const { return path_; }

private:
  std::string path_;
};

class StructureError : public Error {
public:
  using Error::Error;
};

class OrderError : public Error {
public:
  using Error::Error;
};

class GraphError : public Error {
public:
  using Error::Error;
};

} // namespace pnideal
