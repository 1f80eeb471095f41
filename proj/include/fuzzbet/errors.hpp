#pragma once

#include <stdexcept>
#include <string>

namespace fuzzbet {

enum class errc {
  universe_mismatch,  // operands live on different universes
  domain,             // argument outside its mathematical domain
  input,              // malformed or inconsistent external input
  guard,              // combinatorial size guard exceeded
  unknown_label,      // name lookup failed
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void throw_mismatch(const std::string& op) {
  throw Error(errc::universe_mismatch, op + ": operands use different universes");
}

}  // namespace fuzzbet
