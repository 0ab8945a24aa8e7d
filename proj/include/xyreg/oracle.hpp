#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xyreg/groebner.hpp"
#include "xyreg/hilbert.hpp"
#include "xyreg/polynomial.hpp"

namespace xyreg {

enum class Regularity { Regular, NotRegular, Inconclusive };
enum class OracleMethod { Hilbert, Colon };

std::string to_string(Regularity r);
std::string to_string(OracleMethod m);

/// Graded reverse lex over the polynomial's ring, the order all oracles compute in.
OrderPtr oracle_order(std::size_t nvars);

/// Complete-intersection test: R/<seq> has Hilbert numerator prod(1 - t^deg) exactly.
/// Elements must be homogeneous (NonHomogeneousError). BudgetExceeded propagates.
Regularity regular_oracle_hilbert(std::span<const Polynomial> seq, const BuchbergerOptions& options = {});

/// Generators of (J : f) where J is the ideal of `prefix`, via J ∩ <f> computed by elimination
/// of one auxiliary variable ranked above all others. Results live in the prefix's order.
std::vector<Polynomial> colon_ideal(const GroebnerBasis& prefix, const Polynomial& f,
                                    const BuchbergerOptions& options = {});

/// True iff (J : f) = J, i.e. f is a non-zerodivisor modulo J.
bool nonzerodivisor_colon(const GroebnerBasis& prefix, const Polynomial& f, const BuchbergerOptions& options = {});

struct OracleStep {
  std::size_t index;  // 1-based position in the sequence
  Regularity verdict;
  std::string note;
};

struct SequenceVerdict {
  Regularity verdict = Regularity::Regular;
  std::optional<std::size_t> first_failure;  // 1-based
  std::vector<OracleStep> steps;
  std::optional<HilbertData> hilbert;  // Hilbert method: the computed series
  std::optional<IntPoly> expected_numerator;
  std::string message;
};

/// Runs the chosen oracle over the whole sequence. The colon method checks each element
/// against its prefix; the Hilbert method tests the full sequence and, on failure, locates the
/// first prefix that is not a complete intersection. Budget overruns give Inconclusive.
SequenceVerdict sequence_oracle(std::span<const Polynomial> seq, OracleMethod method,
                                const BuchbergerOptions& options = {});

struct Rejection {
  std::size_t candidate;  // index into the candidate list
  Regularity verdict;     // NotRegular or Inconclusive
  std::string message;
};

struct ExtensionReport {
  std::vector<Polynomial> sequence;
  std::vector<std::size_t> accepted;
  std::vector<Rejection> rejected;
};

/// Appends, in candidate order, each candidate that keeps the sequence regular. Inconclusive
/// candidates are skipped and logged. DomainError if `base` itself is not regular.
ExtensionReport greedy_extend(std::span<const Polynomial> base, std::span<const Polynomial> candidates,
                              OracleMethod method, const BuchbergerOptions& options = {});

}  // namespace xyreg
