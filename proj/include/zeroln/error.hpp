#pragma once

#include <stdexcept>
#include <string>

namespace zeroln {

// Runtime error with a stable machine-readable code. The CLI maps these to
// JSON error objects on stderr; library callers can switch on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error rank_deficient(const std::string& msg) { return {"rank_deficient", msg}; }
inline Error non_finite(const std::string& msg) { return {"non_finite", msg}; }
inline Error all_zero_outcome() {
  return {"all_zero_outcome", "outcome is zero for every observation"};
}
inline Error invalid_spec(const std::string& msg) { return {"invalid_spec", msg}; }
inline Error dimension_mismatch(const std::string& msg) { return {"dimension_mismatch", msg}; }

}  // namespace zeroln
