#include "regalia/free_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regalia {

ExtInt FreeModule::max_twist() const {
  if (twists.empty()) return ExtInt::neg_inf();
  return ExtInt(*std::max_element(twists.begin(), twists.end()));
}

ExtInt FreeModule::min_twist() const {
  if (twists.empty()) return ExtInt::pos_inf();
  return ExtInt(*std::min_element(twists.begin(), twists.end()));
}

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source)
    : target_(std::move(target)), source_(std::move(source)) {
  if (!same_ring(target_.ring, source_.ring))
    throw std::invalid_argument("GradedMatrix: source/target over different rings");
  entries_.assign(target_.rank(),
                  std::vector<Polynomial>(source_.rank(), Polynomial::zero(target_.ring)));
}

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source,
                           std::vector<std::vector<Polynomial>> entries)
    : target_(std::move(target)), source_(std::move(source)), entries_(std::move(entries)) {
  if (!same_ring(target_.ring, source_.ring))
    throw std::invalid_argument("GradedMatrix: source/target over different rings");
  if (static_cast<int>(entries_.size()) != target_.rank())
    throw std::invalid_argument("GradedMatrix: row count mismatch");
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != source_.rank())
      throw std::invalid_argument("GradedMatrix: column count mismatch");
  validate();
}

void GradedMatrix::validate() const {
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const Polynomial& f = entries_[r][c];
      if (f.is_zero()) continue;
      if (!same_ring(f.ring(), target_.ring))
        throw std::invalid_argument("GradedMatrix: entry over wrong ring");
      if (!f.is_homogeneous())
        throw std::invalid_argument("GradedMatrix: inhomogeneous entry at (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
      long long want = source_.twist(c) - target_.twist(r);
      if (f.degree() != ExtInt(want))
        throw std::invalid_argument(
            "GradedMatrix: entry degree " + f.degree().str() + " at (" + std::to_string(r) +
            "," + std::to_string(c) + ") does not match twist difference " +
            std::to_string(want));
    }
}

void GradedMatrix::set_entry(int r, int c, Polynomial f) {
  if (!f.is_zero()) {
    if (!same_ring(f.ring(), target_.ring))
      throw std::invalid_argument("GradedMatrix: entry over wrong ring");
    if (!f.is_homogeneous() ||
        f.degree() != ExtInt(source_.twist(c) - target_.twist(r)))
      throw std::invalid_argument("GradedMatrix: entry degree mismatch in set_entry");
  }
  entries_.at(r).at(c) = std::move(f);
}

std::vector<Polynomial> GradedMatrix::column(int c) const {
  std::vector<Polynomial> col;
  col.reserve(rows());
  for (int r = 0; r < rows(); ++r) col.push_back(entries_[r][c]);
  return col;
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

bool GradedMatrix::column_is_zero(int c) const {
  for (int r = 0; r < rows(); ++r)
    if (!entries_[r][c].is_zero()) return false;
  return true;
}

GradedMatrix operator*(const GradedMatrix& A, const GradedMatrix& B) {
  if (!(A.source_ == B.target_))
    throw std::invalid_argument("GradedMatrix: composition shape mismatch");
  GradedMatrix C(A.target_, B.source_);
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < B.cols(); ++c) {
      Polynomial acc = Polynomial::zero(A.target_.ring);
      for (int k = 0; k < A.cols(); ++k) {
        if (A.entries_[r][k].is_zero() || B.entries_[k][c].is_zero()) continue;
        acc = acc + A.entries_[r][k] * B.entries_[k][c];
      }
      C.entries_[r][c] = std::move(acc);
    }
  return C;
}

GradedMatrix GradedMatrix::submatrix(const std::vector<int>& row_idx,
                                     const std::vector<int>& col_idx) const {
  FreeModule t{target_.ring, {}};
  for (int r : row_idx) t.twists.push_back(target_.twist(r));
  FreeModule s{source_.ring, {}};
  for (int c : col_idx) s.twists.push_back(source_.twist(c));
  GradedMatrix M(std::move(t), std::move(s));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j)
      M.entries_[i][j] = entries_.at(row_idx[i]).at(col_idx[j]);
  return M;
}

GradedMatrix GradedMatrix::concat_columns(const GradedMatrix& B) const {
  if (!(target_ == B.target_))
    throw std::invalid_argument("GradedMatrix: concat_columns target mismatch");
  FreeModule s = source_;
  s.twists.insert(s.twists.end(), B.source_.twists.begin(), B.source_.twists.end());
  GradedMatrix M(target_, std::move(s));
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) M.entries_[r][c] = entries_[r][c];
    for (int c = 0; c < B.cols(); ++c) M.entries_[r][cols() + c] = B.entries_[r][c];
  }
  return M;
}

GradedMatrix GradedMatrix::identity(const FreeModule& F) {
  GradedMatrix M(F, F);
  for (int i = 0; i < F.rank(); ++i)
    M.entries_[i][i] = Polynomial::constant(F.ring, 1);
  return M;
}

std::string GradedMatrix::str() const {
  std::ostringstream out;
  for (int r = 0; r < rows(); ++r) {
    out << (r == 0 ? "[" : " ");
    out << "[";
    for (int c = 0; c < cols(); ++c) out << (c ? ", " : "") << entries_[r][c].str();
    out << "]";
    out << (r + 1 == rows() ? "]" : ",\n");
  }
  if (rows() == 0) out << "[]";
  return out.str();
}

}  // namespace regalia

namespace regalia {

FreeModule tensor_modules(const FreeModule& F, const FreeModule& G) {
  if (!same_ring(F.ring, G.ring))
    throw std::invalid_argument("tensor_modules: ring mismatch");
  std::vector<int> twists;
  twists.reserve(static_cast<std::size_t>(F.rank()) * G.rank());
  for (int a = 0; a < F.rank(); ++a)
    for (int b = 0; b < G.rank(); ++b) twists.push_back(F.twist(a) + G.twist(b));
  return FreeModule{F.ring, std::move(twists)};
}

GradedMatrix kronecker(const GradedMatrix& A, const GradedMatrix& B) {
  FreeModule target = tensor_modules(A.target(), B.target());
  FreeModule source = tensor_modules(A.source(), B.source());
  int br = B.rows(), bc = B.cols();
  std::vector<std::vector<Polynomial>> entries(
      target.rank(), std::vector<Polynomial>(source.rank(), Polynomial::zero(target.ring)));
  for (int r1 = 0; r1 < A.rows(); ++r1)
    for (int c1 = 0; c1 < A.cols(); ++c1) {
      if (A.entry(r1, c1).is_zero()) continue;
      for (int r2 = 0; r2 < br; ++r2)
        for (int c2 = 0; c2 < bc; ++c2) {
          if (B.entry(r2, c2).is_zero()) continue;
          entries[r1 * br + r2][c1 * bc + c2] = A.entry(r1, c1) * B.entry(r2, c2);
        }
    }
  return GradedMatrix(std::move(target), std::move(source), std::move(entries));
}

}  // namespace regalia
