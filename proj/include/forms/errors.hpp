#pragma once

#include <stdexcept>
#include <string>

namespace forms {

/* Error hierarchy. "Soft" negative outcomes (NotDivisible, NotUnit, NotFound,
 * NoFactorization, NoneFound) are conveyed through std::optional return
 * values, not exceptions; everything below is a genuine contract violation
 * or an exhausted resource. */

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_mismatch : error { using error::error; };
struct epsilon_mismatch : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct zero_input : error { using error::error; };
struct invariant_violation : error { using error::error; };
struct degenerate_presentation : error { using error::error; };
struct degenerate_form : error { using error::error; };
struct singular_form : error { using error::error; };
struct not_an_isometry : error { using error::error; };
struct value_not_in_lambda : error { using error::error; };
struct not_block_refinable : error { using error::error; };
struct no_factorization : error { using error::error; };
struct not_divisible : error { using error::error; };
struct not_a_lagrangian : error { using error::error; };
struct non_integral_dual : error { using error::error; };
struct correction_failed : error { using error::error; };
struct resource_bound_exceeded : error { using error::error; };
struct not_coprime : error { using error::error; };
struct no_metaboliser : error { using error::error; };
struct not_delta_one : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace forms
