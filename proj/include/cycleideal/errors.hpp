#pragma once

#include <stdexcept>
#include <string>

namespace cycleideal {

// One exception type with a machine-checkable code, so callers and tests
// can distinguish error paths without parsing messages.
class Error : public std::runtime_error {
  public:
    enum class Code {
        Parse,
        Validation,
        SameVertex,
        Disconnects,
        TooLarge,
        BadLength,
        LengthMismatch,
        NotASymmetry,
        BudgetExceeded,
        Internal,
    };

    Error(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Code code() const { return code_; }

  private:
    Code code_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace cycleideal
