#pragma once

#include <stdexcept>
#include <string>

namespace llmspace {

/// Error taxonomy shared by all modules. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
  public:
    enum class Kind {
        Config,     // bad document structure, schema violation, invariant breach
        NotFound,   // lookup of an unknown catalog or scenario name
        Domain,     // valid inputs that violate a model precondition
        Io,         // file access problems
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

inline Error config_error(std::string msg) { return Error(Error::Kind::Config, std::move(msg)); }
inline Error not_found_error(std::string msg) { return Error(Error::Kind::NotFound, std::move(msg)); }
inline Error domain_error(std::string msg) { return Error(Error::Kind::Domain, std::move(msg)); }
inline Error io_error(std::string msg) { return Error(Error::Kind::Io, std::move(msg)); }

} // namespace llmspace
