#pragma once

#include <stdexcept>
#include <string>

namespace balid {

// Two quadratic-extension operands carried different adjoined roots.
struct discriminant_mismatch : std::invalid_argument {
  explicit discriminant_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct not_invertible : std::domain_error {
  explicit not_invertible(const std::string& msg) : std::domain_error(msg) {}
};

struct negative_index : std::domain_error {
  explicit negative_index(const std::string& msg) : std::domain_error(msg) {}
};

// Binary series operation on operands of different truncation order.
struct order_mismatch : std::invalid_argument {
  explicit order_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, long line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  long line;
};

struct unknown_identity : std::invalid_argument {
  explicit unknown_identity(const std::string& id)
      : std::invalid_argument("unknown identity: " + id) {}
};

// Parameter tuple outside an identity's declared domain.
struct domain_violation : std::invalid_argument {
  explicit domain_violation(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace balid
