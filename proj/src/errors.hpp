#ifndef DCBELL_ERRORS_HPP
#define DCBELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcbell {

// Error categories map 1:1 onto the C API status codes (and from there
// onto CLI exit codes), so every throw site picks one deliberately.
enum class Errc {
    invalid_argument,   // bad parameter or mismatched operands
    degenerate_input,   // mathematically undefined for this input (zero norm, product state, ...)
    config,             // malformed or inconsistent configuration
    numeric,            // an internal numerical validation failed
    io                  // file missing or unreadable
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) raise(code, msg);
}

} // namespace dcbell

#endif
