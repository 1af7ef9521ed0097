#pragma once

#include <stdexcept>
#include <string>

namespace foldcover {

// Error classes map onto the CLI exit-code contract:
//   parse/validation -> 2, construction failures -> 3, certification -> 4.
enum class errc {
  parse_error,
  validation,
  subgroup_not_peripheral_free,
  y_not_separated,
  connector_not_separating,
  gadget_contract,
  completion_budget,
  certification,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "PARSE_ERROR";
    case errc::validation: return "VALIDATION";
    case errc::subgroup_not_peripheral_free: return "SUBGROUP_NOT_PERIPHERAL_FREE";
    case errc::y_not_separated: return "Y_NOT_SEPARATED";
    case errc::connector_not_separating: return "CONNECTOR_NOT_SEPARATING";
    case errc::gadget_contract: return "GADGET_CONTRACT";
    case errc::completion_budget: return "COMPLETION_BUDGET";
    case errc::certification: return "CERTIFICATION";
    case errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline int exit_code(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::validation:
      return 2;
    case errc::certification:
      return 4;
    default:
      return 3;
  }
}

}  // namespace foldcover
