#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qf {

// Domain error with a stable machine-readable name. The CLI prints the name
// on stderr and maps it to exit code 1; tests match on names.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail = "") {
  throw Error(name, detail);
}

}  // namespace qf
