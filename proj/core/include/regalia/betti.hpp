#pragma once

#include "regalia/complexes.hpp"
#include "regalia/extint.hpp"

#include <map>
#include <string>
#include <utility>

namespace regalia {

/// Graded Betti numbers beta_{ij} read off a minimal free resolution:
/// beta_{ij} = number of degree-j generators of F_i.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, long long> entries);

  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  long long beta(int i, int j) const;
  /// Largest homological index with a nonzero row (-1 for the zero table).
  int max_index() const;
  /// b_i = max{j : beta_{ij} != 0}; -inf when row i is empty.
  ExtInt b(int i) const;
  /// reg_i = max_{j <= i} (b_j - j); -inf when all those rows are empty.
  ExtInt reg_upto(int i) const;
  /// Castelnuovo-Mumford regularity from the table: reg_upto(max_index).
  ExtInt reg() const;
  long long total(int i) const;

  /// Macaulay-style staircase: rows are j - i, columns i.
  std::string staircase() const;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// Read the Betti table off a (minimal) resolution's twists.
BettiTable betti_from_complex(const ChainComplex& c);

}  // namespace regalia
