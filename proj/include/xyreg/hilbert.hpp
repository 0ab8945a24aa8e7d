#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xyreg/groebner.hpp"
#include "xyreg/monomial.hpp"
#include "xyreg/polynomial.hpp"

namespace xyreg {

/// Integer polynomial in t, coefficient k is the t^k coefficient. No trailing zeros.
using IntPoly = std::vector<std::int64_t>;

IntPoly intpoly_trim(IntPoly p);
IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b);
std::string intpoly_to_string(const IntPoly& p);

/// Hilbert series of a graded quotient of a polynomial ring in `nvars` variables,
/// stored as numerator / (1 - t)^nvars.
struct HilbertData {
  IntPoly numerator;
  std::size_t nvars = 0;

  /// Coefficients of the power series in degrees 0..max_degree.
  std::vector<std::int64_t> series(std::size_t max_degree) const;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Numerator for R / <gens> with R in `nvars` variables; redundant generators are tolerated.
///
/// Pivot recursion N(<m1..mk>) = N(<m2..mk>) - t^deg(m1) N(<m2..mk> : m1), with generators that
/// share no variable with the rest split off as factors (1 - t^deg).
HilbertData hilbert_numerator(std::span<const Monomial> gens, std::size_t nvars);

/// prod (1 - t^d_i), the numerator of a complete intersection with generator degrees d_i.
IntPoly complete_intersection_numerator(std::span<const std::uint64_t> degrees);

/// Hilbert series of R / <gens> via a Groebner basis under `order` and its lead ideal.
/// NonHomogeneousError if a generator is not homogeneous.
HilbertData hilbert_series_quotient(std::span<const Polynomial> gens, const OrderPtr& order,
                                    const BuchbergerOptions& options = {});

}  // namespace xyreg
