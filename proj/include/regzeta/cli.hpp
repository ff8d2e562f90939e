#ifndef REGZETA_CLI_HPP
#define REGZETA_CLI_HPP

namespace regzeta {

/* Full command-line surface (types / orbits / zeta / verify).  Returns the
   process exit code: 0 success or empty diff, 1 usage or other failure,
   2 hypothesis violation (even q, or so_2n^eps over q <= 3), 3 budget cap
   exceeded, 4 verification mismatch. */
int run_cli(int argc, const char* const* argv);

}  // namespace regzeta

#endif
