#include "regalia/betti.hpp"

#include <algorithm>
#include <sstream>

namespace regalia {

BettiTable::BettiTable(std::map<std::pair<int, int>, long long> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();)
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
}

long long BettiTable::beta(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [ij, v] : entries_) m = std::max(m, ij.first);
  return m;
}

ExtInt BettiTable::b(int i) const {
  ExtInt m = ExtInt::neg_inf();
  for (const auto& [ij, v] : entries_)
    if (ij.first == i) m = max(m, ExtInt(ij.second));
  return m;
}

ExtInt BettiTable::reg_upto(int i) const {
  ExtInt m = ExtInt::neg_inf();
  for (const auto& [ij, v] : entries_)
    if (ij.first <= i) m = max(m, ExtInt(ij.second - ij.first));
  return m;
}

ExtInt BettiTable::reg() const { return reg_upto(max_index()); }

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [ij, v] : entries_)
    if (ij.first == i) t += v;
  return t;
}

std::string BettiTable::staircase() const {
  if (entries_.empty()) return "(zero)\n";
  int imax = max_index();
  int jlo = 0, jhi = 0;
  bool first = true;
  for (const auto& [ij, v] : entries_) {
    int row = ij.second - ij.first;
    if (first || row < jlo) jlo = row;
    if (first || row > jhi) jhi = row;
    first = false;
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= imax; ++i) os << i << "\t";
  os << "\n";
  for (int row = jlo; row <= jhi; ++row) {
    os << row << ":    ";
    for (int i = 0; i <= imax; ++i) {
      long long v = beta(i, row + i);
      if (v == 0)
        os << ".\t";
      else
        os << v << "\t";
    }
    os << "\n";
  }
  return os.str();
}

BettiTable betti_from_complex(const ChainComplex& c) {
  std::map<std::pair<int, int>, long long> entries;
  for (int i = 0; i <= c.length(); ++i)
    for (int t : c.module(i).twists) ++entries[{i, t}];
  return BettiTable(std::move(entries));
}

}  // namespace regalia
