#ifndef KREINCCR_CLI_HPP
#define KREINCCR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "kreinccr/representations.hpp"

namespace kreinccr::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kConditioningError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json representation_to_json(const Representation& rep);
// Validates the schema and rebuilds the matrices; throws DomainError.
Representation representation_from_json(const nlohmann::json& doc);

// %.17g
std::string format_real(double x);

}  // namespace kreinccr::cli

#endif  // KREINCCR_CLI_HPP
