#pragma once

#include <iosfwd>

namespace povmcoh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Entry point of the `povmcoh` command line tool:
///
///   povm validate (--params θ1,θ2 | --params γ1,γ2,γ3,γ4 | --povm FILE)
///   povm export   --params ... --out FILE.json
///   measure    --state AMPS --povm SPEC --measure {r|l1|rob|tsallis} [--lambda x]
///   bounds     --experiment ID --alpha a --beta b [--lambda x]
///   experiment --experiment ID --trials N --seed S [--lambda x] [--scheme s]
///              [--threads k] --out FILE.csv
///
/// Returns 0 on success, 2 on a failed validation, 1 on usage or input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace povmcoh
