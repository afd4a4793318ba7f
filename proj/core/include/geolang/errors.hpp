#pragma once

#include <stdexcept>
#include <string>

namespace geolang {

  // Base for every error raised by the library. The CLI maps subclasses to
  // exit codes: InputError -> 2, ResourceCap -> 3, Refuted -> 1.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or inconsistent input (bad words, bad group files, bad gensets).
  class InputError : public Error {
   public:
    using Error::Error;
  };

  class UnknownLetter : public InputError {
   public:
    explicit UnknownLetter(std::string const& name)
        : InputError("unknown letter: " + name), name_(name) {}
    std::string const& name() const noexcept { return name_; }

   private:
    std::string name_;
  };

  class NotDownwardClosed : public InputError {
   public:
    NotDownwardClosed(std::string const& w, std::string const& u)
        : InputError("language not closed under deletion: " + w
                     + " is a member but " + u + " is not"),
          member(w),
          missing(u) {}
    std::string member;
    std::string missing;
  };

  class NotFactorClosed : public InputError {
   public:
    NotFactorClosed(std::string const& w, std::string const& u)
        : InputError("language not factor-closed: " + w + " is a member but "
                     + u + " is not"),
          member(w),
          missing(u) {}
    std::string member;
    std::string missing;
  };

  class IdentityLetter : public InputError {
   public:
    explicit IdentityLetter(std::string const& name)
        : InputError("letter " + name + " represents the identity") {}
  };

  class NotGenerating : public InputError {
   public:
    using InputError::InputError;
  };

  class InverseMismatch : public InputError {
   public:
    using InputError::InputError;
  };

  class DuplicateElement : public InputError {
   public:
    using InputError::InputError;
  };

  class BadParams : public InputError {
   public:
    using InputError::InputError;
  };

  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  // A configured element or coset budget was exhausted.
  class ResourceCap : public Error {
   public:
    using Error::Error;
  };

  // A mathematical claim the library was asked to reproduce did not hold.
  class Refuted : public Error {
   public:
    using Error::Error;
  };

  class SelectionFailed : public Refuted {
   public:
    using Refuted::Refuted;
  };

  class LiftNotGeodesic : public Refuted {
   public:
    using Refuted::Refuted;
  };

  class MismatchedCell : public Refuted {
   public:
    using Refuted::Refuted;
  };

}  // namespace geolang
