#ifndef ANET_ERROR_HPP
#define ANET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace anet {

// Caller handed us something that violates a precondition: unknown symbol,
// node outside the domain, bad parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed model file or formula text. `where` is a JSON path or a character
// offset, whichever the parser can give.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)),
        message_(what) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string where_;
  std::string message_;
};

// A run outgrew the configured resource guard (e.g. a word set exploded).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace anet

#endif  // ANET_ERROR_HPP
