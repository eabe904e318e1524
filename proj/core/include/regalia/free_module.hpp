#pragma once

#include "regalia/polynomial.hpp"
#include "regalia/ring.hpp"

#include <string>
#include <vector>

namespace regalia {

/// A graded free module over a ring: component k is Ring(-twists[k]), so the
/// k-th generator sits in degree twists[k].
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int twist(int k) const { return twists.at(k); }
  /// Largest generator degree; -inf for the zero module.
  ExtInt max_twist() const;
  ExtInt min_twist() const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_ring(a.ring, b.ring) && a.twists == b.twists;
  }
};

/// A degree-0 homogeneous map of graded free modules, stored as a dense
/// rows x cols entry grid: entry (r, c) is homogeneous of degree
/// source.twist(c) - target.twist(r) or zero.  Construction validates this.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Zero map.
  GradedMatrix(FreeModule target, FreeModule source);
  /// entries[r][c]; validated for ring consistency and homogeneity.
  GradedMatrix(FreeModule target, FreeModule source,
               std::vector<std::vector<Polynomial>> entries);

  const FreeModule& target() const { return target_; }
  const FreeModule& source() const { return source_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }

  const Polynomial& entry(int r, int c) const { return entries_.at(r).at(c); }
  /// Replaces an entry; validates degree.
  void set_entry(int r, int c, Polynomial f);

  std::vector<Polynomial> column(int c) const;
  bool is_zero() const;
  bool column_is_zero(int c) const;

  /// Matrix product this * B (composition: apply B then this).
  friend GradedMatrix operator*(const GradedMatrix& A, const GradedMatrix& B);

  /// The same matrix with rows/columns restricted to the given index sets
  /// (order preserved).
  GradedMatrix submatrix(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const;

  /// Horizontal concatenation [this | B]; targets must agree.
  GradedMatrix concat_columns(const GradedMatrix& B) const;

  /// Identity on a free module.
  static GradedMatrix identity(const FreeModule& F);

  std::string str() const;

 private:
  void validate() const;
  FreeModule target_, source_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// F (x) G: component (a, b) maps to index a*rank(G)+b; twists add.
FreeModule tensor_modules(const FreeModule& F, const FreeModule& G);
/// Kronecker product A (x) B under the tensor_modules layout (no signs).
GradedMatrix kronecker(const GradedMatrix& A, const GradedMatrix& B);

}  // namespace regalia
