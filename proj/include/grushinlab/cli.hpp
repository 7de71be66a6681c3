#pragma once

namespace grushinlab {

// Subcommands: spectrum, asymptotics, agmon, decay, minimal-time, simulate,
// koenig-demo, bump-check, validate. Exit 0 on success, 2 on validation
// failure, 3 on numerical-guard failure.
int run(int argc, const char* const* argv);

}  // namespace grushinlab
