#include "veronese/error.hpp"

namespace veronese {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::length_too_short: return "LengthTooShort";
    case errc::not_prime: return "NotPrime";
    case errc::length_not_multiple: return "LengthNotMultiple";
    case errc::total_not_zero: return "TotalNotZero";
    case errc::length_not_doubled: return "LengthNotDoubled";
    case errc::too_large: return "TooLarge";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_member: return "NotMember";
    case errc::not_invariant: return "NotInvariant";
    case errc::wrong_degree: return "WrongDegree";
    case errc::not_multiple: return "NotMultiple";
    case errc::not_invertible: return "NotInvertible";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::characteristic_divides_order: return "CharacteristicDividesOrder";
    case errc::non_integer_entries: return "NonIntegerEntries";
    case errc::root_unavailable: return "RootUnavailable";
    case errc::unknown_entry: return "UnknownEntry";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::schema_error: return "SchemaError";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace veronese
