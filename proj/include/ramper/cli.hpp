#pragma once

#include <iosfwd>
#include <string>

#include "ramper/obstruction.hpp"

namespace ramper::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;  // also internal errors
inline constexpr int exit_invalid_input = 2;

struct Config {
    long precision = 50;     // pi-adic working precision, >= 4
    long height_bound = 20;  // witness search height, >= 1
    long count = 5;          // examples (generate) or solutions (pell)
    std::string out_path;    // empty: stdout
    int verbosity = 0;
};

// Default precision, RAMPER_PRECISION overriding 50 when set; an explicit
// --precision flag beats both.  Unparsable values are reported on err and
// fall back to 50.
long default_precision(std::ostream& err);

// Parses "x+y*sqrtP" (rationals allowed: "3/2-1/4*sqrt13", lone "sqrt5");
// throws std::invalid_argument on malformed input or mismatched P.
QuadElem parse_quad_literal(long p, const std::string& s);

ObstructionReport generate_report(long p, long g, long k, const Config& cfg);

int cmd_generate(long p, long g, const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const Config& cfg, std::ostream& out,
               std::ostream& err);
int cmd_pell(long p, const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_period(long p, long g, const std::string& a_literal, const Config& cfg,
               std::ostream& out, std::ostream& err);

}  // namespace ramper::cli
