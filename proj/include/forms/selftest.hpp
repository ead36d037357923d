#pragma once

#include <iosfwd>

namespace forms {

// Deterministic invariant corpus: involution and unit laws, exact rational
// arithmetic, Hermitian pairing laws, boundary well-definedness and
// functoriality, quadratic class invariance, hyperbolization of transported
// Lagrangians, unions along boundary isometries, and the Seifert
// determinant law. Prints one line per section to `out` and returns the
// number of failed checks (0 on success). Fixed seeds, so runs are
// reproducible.
int run_selftest(std::ostream& out);

}  // namespace forms
