#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galaxia {

enum class Errc {
  parse,
  validate,
  cyclic,
  not_nice,
  not_forest,
  bad_shape,
  bad_params,
  invalid_colouring,
  infeasible,
  bad_lists,
  precondition_violated,
  not_subcubic,
  has_k4,
  degree_too_high,
  has_digon,
  above_cap,
  too_large,
  not_cubic,
  size_overflow,
  no_applicable_algorithm,
  // A proof obligation that should always hold did not.
  internal_defect,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(Errc::parse, "line " + std::to_string(line) + ": " + reason), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when an operation that needs an acyclic input meets a circuit.
/// The witness is a list of arc indices forming the circuit, in order.
class CyclicError : public Error {
 public:
  explicit CyclicError(std::vector<int> circuit)
      : Error(Errc::cyclic, "digraph contains a circuit of length " + std::to_string(circuit.size())),
        circuit_(std::move(circuit)) {}

  const std::vector<int>& circuit() const noexcept { return circuit_; }

 private:
  std::vector<int> circuit_;
};

}  // namespace galaxia
