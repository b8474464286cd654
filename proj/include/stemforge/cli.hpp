#ifndef STEMFORGE_CLI_HPP
#define STEMFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stemforge {

// Exit codes: 0 ok, 1 usage or input error, 2 counterexamples found.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexamples = 2;

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace stemforge

#endif
