#ifndef PSL2COV_ERRORS_HPP_
#define PSL2COV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace psl2cov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
 public:
  explicit NotAPrimePower(const std::string& what) : Error("NotAPrimePower: " + what) {}
};

class CaseMismatch : public Error {
 public:
  explicit CaseMismatch(const std::string& what) : Error("CaseMismatch: " + what) {}
};

/// An inner product failed to reduce to an integer multiple of |G|. Always a bug.
class IntegralityViolation : public Error {
 public:
  explicit IntegralityViolation(const std::string& what)
      : Error("IntegralityViolation: " + what) {}
};

class NegativeMultiplicity : public Error {
 public:
  explicit NegativeMultiplicity(const std::string& what)
      : Error("NegativeMultiplicity: " + what) {}
};

class ExponentCapExceeded : public Error {
 public:
  ExponentCapExceeded(const std::string& label, int cap)
      : Error("ExponentCapExceeded: " + label + " not covering for t <= " + std::to_string(cap)),
        label_(label),
        cap_(cap) {}

  const std::string& label() const noexcept { return label_; }
  int cap() const noexcept { return cap_; }

 private:
  std::string label_;
  int cap_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error("CapExceeded: " + what) {}
};

class MatchFailure : public Error {
 public:
  explicit MatchFailure(const std::string& what) : Error("MatchFailure: " + what) {}
};

class InvalidLabel : public Error {
 public:
  explicit InvalidLabel(const std::string& what) : Error("InvalidLabel: " + what) {}
};

}  // namespace psl2cov

#endif  // PSL2COV_ERRORS_HPP_
