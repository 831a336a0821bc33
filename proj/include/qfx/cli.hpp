#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfx::cli {

// exit codes: 0 success / certificate, 1 computation error, 2 refutation
// (reserved; indicates an internal inconsistency over the supported
// fields), 64 usage error
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefutation = 2;
inline constexpr int kExitUsage = 64;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "gf(7)", "gf(9)", "gf(3^2)"
struct FieldSpec {
    uint64_t p, k;
};
FieldSpec parse_field_designator(const std::string& text);

}  // namespace qfx::cli
