#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ctc {

// Library-wide error with a stable machine-readable code. Codes in use:
//   invalid-argument, invalid-fault-set, not-a-root, infeasible-graph,
//   invalid-partition, invalid-schedule, invalid-input, incomplete-table,
//   parse-error, invalid-config, verification-failure.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw Error(std::move(code), what);
}

}  // namespace ctc
