#pragma once

#include <string>
#include <vector>

namespace qadd::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 2 usage error, 3 bad input (files, configs,
// circuits), 4 internal invariant failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitInternal = 4;

// Full command-line entry point (args excludes argv[0]). Used by the `qadd`
// binary and called in-process by tests.
int run_cli(const std::vector<std::string>& args);

// ISO-8601 UTC timestamp for manifests. Honors SOURCE_DATE_EPOCH when set so
// reruns with identical inputs produce byte-identical files.
std::string manifest_timestamp();

}  // namespace qadd::cli
