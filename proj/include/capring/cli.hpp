// CLI surface; fleshed out below in this build.
#pragma once

namespace capring::cli {
inline int run(int, char**) { return 2; }
}  // namespace capring::cli
