#pragma once

namespace hns {

// Entry point behind main(). Exit codes: 0 success, 1 runtime failure,
// 2 usage error (unknown flags, missing paths, malformed scenario/config).
int run_cli(int argc, char** argv);

}  // namespace hns
