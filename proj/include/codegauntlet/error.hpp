#ifndef CODEGAUNTLET_ERROR_HPP
#define CODEGAUNTLET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cg {

// Base for all pipeline errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration, unusable environment, missing upstream artifacts.
// CLI exit code 2.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Persistence failure (corrupt file, failed write). The pass that hit it
// aborts but can be resumed. CLI exit code 3.
class StoreError : public Error {
  public:
    explicit StoreError(const std::string& what) : Error(what) {}
};

// Remote backend gave up after bounded retries. Resumable. CLI exit code 4.
class BackendError : public Error {
  public:
    explicit BackendError(const std::string& what) : Error(what) {}
};

// Invalid argument to a pure computation (pass@k domain error etc).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace cg

#endif
