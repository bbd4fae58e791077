#ifndef COBALG_SERIES_IO_HPP
#define COBALG_SERIES_IO_HPP

#include <string_view>

#include "cobalg/lazard.hpp"
#include "cobalg/series.hpp"

namespace cobalg {

/* Text parser for the printer grammar:
 *
 *   expr   := ['-'] term { ('+'|'-') term }
 *   term   := factor { '*' factor }
 *   factor := atom [ '^' nat ]
 *   atom   := rational | p<digits> | variable | '(' expr ')'
 *
 * so everything to_string() emits round-trips.  Coefficients live in the
 * Lazard ring; parse_rational_series additionally rejects generators.
 */
TruncSeries<LazardElement> parse_series(std::string_view text,
                                        std::vector<std::string> vars, int order);
TruncSeries<Rational> parse_rational_series(std::string_view text,
                                            std::vector<std::string> vars, int order);

// Embedding along Q -> Q[p1, p2, ...] and its partial inverse (throws if a
// generator actually occurs).
TruncSeries<LazardElement> lift(const TruncSeries<Rational>& s);
TruncSeries<Rational> narrow(const TruncSeries<LazardElement>& s);

}  // namespace cobalg

#endif
