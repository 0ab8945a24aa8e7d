#include "xyreg/variables.hpp"

#include "xyreg/errors.hpp"

namespace xyreg {

VariableTable::VariableTable(std::size_t n) : n_(n) {
  if (n < 2) throw DomainError("matrix size n must be at least 2, got " + std::to_string(n));
}

std::size_t VariableTable::slot(MatrixVar kind, std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw DomainError("index [" + std::to_string(i) + "," + std::to_string(j) + "] outside 1.." +
                      std::to_string(n_));
  }
  const std::size_t base = kind == MatrixVar::X ? 0 : n_ * n_;
  return base + (i - 1) * n_ + (j - 1);
}

VariableTable::Entry VariableTable::entry(std::size_t slot) const {
  if (slot >= nvars()) throw DimensionError("slot " + std::to_string(slot) + " is not a matrix variable");
  const MatrixVar kind = slot < n_ * n_ ? MatrixVar::X : MatrixVar::Y;
  const std::size_t local = slot % (n_ * n_);
  return {kind, local / n_ + 1, local % n_ + 1};
}

std::string VariableTable::name(std::size_t slot) const {
  if (slot >= nvars()) {
    const std::size_t extra = slot - nvars();
    return extra == 0 ? "t" : "t" + std::to_string(extra);
  }
  const Entry e = entry(slot);
  return std::string(e.kind == MatrixVar::X ? "x" : "y") + "[" + std::to_string(e.row) + "," +
         std::to_string(e.col) + "]";
}

}  // namespace xyreg
