#ifndef ECCALU_ERRORS_HPP
#define ECCALU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eccalu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnsupportedCode : Error { using Error::Error; };
struct UnsupportedOp : Error { using Error::Error; };
struct MissingInput : Error { using Error::Error; };
struct UnknownGate : Error { using Error::Error; };
struct IncompleteOpTable : Error { using Error::Error; };
struct EvenLength : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Campaign/CLI configuration problems; carries the offending key so the CLI
// can name it in the exit-2 message.
struct ConfigError : Error {
    explicit ConfigError(const std::string& key, const std::string& what)
        : Error("config key '" + key + "': " + what), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

}  // namespace eccalu

#endif
