#ifndef PSGROUP_ERRORS_HPP
#define PSGROUP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psgroup {

  // Malformed braid-word text; position() is the 0-based character offset.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position)
        : std::runtime_error(message + " at position "
                             + std::to_string(position)),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A generator, pair or strand index outside its admissible range.
  class RangeError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  // Operands living over different strand counts.
  class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A mathematical consistency check failed. Never caused by user input.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace psgroup

#endif  // PSGROUP_ERRORS_HPP
