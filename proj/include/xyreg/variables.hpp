#pragma once

#include <cstddef>
#include <string>

#include "xyreg/monomial.hpp"

namespace xyreg {

enum class MatrixVar { X, Y };

/// Slot layout of K[x_ij, y_ij], 1 <= i, j <= n: x[i,j] then y[i,j], row-major.
class VariableTable {
public:
  struct Entry {
    MatrixVar kind;
    std::size_t row;
    std::size_t col;
  };

  /// DomainError for n < 2.
  explicit VariableTable(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return 2 * n_ * n_; }

  /// 1-indexed (i, j); DomainError when out of 1..n.
  std::size_t slot(MatrixVar kind, std::size_t i, std::size_t j) const;
  std::size_t x(std::size_t i, std::size_t j) const { return slot(MatrixVar::X, i, j); }
  std::size_t y(std::size_t i, std::size_t j) const { return slot(MatrixVar::Y, i, j); }

  Entry entry(std::size_t slot) const;
  /// "x[i,j]" / "y[i,j]"; slots past 2n^2 (auxiliary variables) print as "t" or "t<k>".
  std::string name(std::size_t slot) const;

  Monomial variable(MatrixVar kind, std::size_t i, std::size_t j) const {
    return Monomial::variable(nvars(), slot(kind, i, j));
  }

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
  std::size_t n_;
};

}  // namespace xyreg
