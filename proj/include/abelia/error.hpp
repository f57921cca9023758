#ifndef ABELIA_ERROR_HPP_
#define ABELIA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelia {

  // Base class of everything the library throws for bad input.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class SignatureMismatch : public Error {
   public:
    using Error::Error;
  };

  // A configured size limit would be exceeded.  Results that depend on the
  // skipped work are "unknown", never negative.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace abelia

#endif
