#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

// Failure taxonomy shared by all modules. The CLI maps these onto exit codes,
// so every throwing path in the library uses Error rather than ad-hoc types.
enum class errc {
  length_too_short,
  not_prime,
  length_not_multiple,
  total_not_zero,
  length_not_doubled,
  too_large,
  dimension_mismatch,
  not_member,
  not_invariant,
  wrong_degree,
  not_multiple,
  not_invertible,
  group_too_large,
  characteristic_divides_order,
  non_integer_entries,
  root_unavailable,
  unknown_entry,
  invalid_argument,
  schema_error,
  usage_error,
};

// Stable identifier used in diagnostics and machine output.
const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace veronese
