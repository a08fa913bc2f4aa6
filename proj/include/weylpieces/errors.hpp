#ifndef WEYLPIECES_ERRORS_HPP
#define WEYLPIECES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylpieces
{

/// Coarse failure classes. The CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorClass
{
  config,   // malformed input: bad Cartan data, bad word, failed precondition
  guard,    // problem too large for the configured limits
  contract  // a mathematical guarantee did not hold: always a bug alarm
};

class Error : public std::runtime_error
{
public:
  Error(ErrorClass cls, std::string const &what)
  : std::runtime_error(what), _cls(cls)
  {}

  ErrorClass error_class() const
  { return _cls; }

private:
  ErrorClass _cls;
};

#define WEYLPIECES_DEFINE_ERROR(NAME, CLS)                                   \
  class NAME : public Error                                                  \
  {                                                                          \
  public:                                                                    \
    explicit NAME(std::string const &what) : Error(ErrorClass::CLS, what) {} \
  };

WEYLPIECES_DEFINE_ERROR(SpecError, config)
WEYLPIECES_DEFINE_ERROR(AutomorphismError, config)
WEYLPIECES_DEFINE_ERROR(OrderError, config)
WEYLPIECES_DEFINE_ERROR(WordError, config)
WEYLPIECES_DEFINE_ERROR(RootError, config)
WEYLPIECES_DEFINE_ERROR(MismatchError, config)
WEYLPIECES_DEFINE_ERROR(PreconditionError, config)
WEYLPIECES_DEFINE_ERROR(GuardError, guard)
WEYLPIECES_DEFINE_ERROR(ContractViolation, contract)
WEYLPIECES_DEFINE_ERROR(InternalError, contract)

#undef WEYLPIECES_DEFINE_ERROR

} // namespace weylpieces

#endif // WEYLPIECES_ERRORS_HPP
