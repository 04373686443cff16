#pragma once

// Command-line front end: eval, verify, bench and propagator subcommands.

#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "opsum/closed_forms.hpp"
#include "opsum/contour.hpp"
#include "opsum/series_oracle.hpp"

namespace opsum::cli {

enum class Family { Gegenbauer, Legendre, ChebyshevT, ChebyshevU, Laguerre, Hermite, Mehler };

inline constexpr Family kAllFamilies[] = {Family::Gegenbauer, Family::Legendre, Family::ChebyshevT,
                                          Family::ChebyshevU, Family::Laguerre,   Family::Hermite,
                                          Family::Mehler};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// One binomial series: family, its parameter (lambda or alpha), order l, the
/// series variable t (z for Hermite and Mehler) and the point (w, u or x; y for Mehler).
struct Problem {
  Family family = Family::Legendre;
  double param = 0;
  unsigned l = 0;
  Complex t;
  double arg = 0;
  double arg2 = 0;
};

Complex closed_value(const Problem& p);
SeriesSpec series_spec(const Problem& p);

/// Standard precision first, extended when standard declines to certify.
EvalReport series_value(const Problem& p, const PrecisionCtx& ctx = {});

/// Contour on the default translated circle.
ContourResult contour_value(const Problem& p, unsigned nodes = 512);

/// A uniformly drawn admissible problem with l <= l_max (l >= 1 for Chebyshev T).
Problem random_problem(Family f, unsigned l_max, bool complex_t, std::mt19937_64& rng);

/// OPSUM_THREADS when set to a positive integer, else the hardware concurrency.
unsigned thread_count();

/// Runs the command line (args exclude the program name).  Exit codes: 0 success,
/// 1 verification failures, 2 bad arguments or domain errors, 3 no certified result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opsum::cli
