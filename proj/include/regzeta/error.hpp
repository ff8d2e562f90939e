#ifndef REGZETA_ERROR_HPP
#define REGZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace regzeta {

/* Failure taxonomy shared across the library.  The CLI maps these to process
   exit codes: SmallFieldUnsupported -> 2, CapExceeded -> 3, anything else
   that escapes -> 1. */
enum class Errc {
    NotPrime,
    NotOdd,
    TooLarge,
    ZeroInput,
    NotMonic,
    ParityViolation,
    DegenerateForm,
    NotInLieAlgebra,
    InvalidRank,
    SmallFieldUnsupported,
    CapExceeded,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace regzeta

#endif
