#include "gbtc/exact_rank.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace gbtc {

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseIntMatrix::add(std::size_t row, std::size_t col, long value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("sparse matrix index");
  auto& r = data_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  if (it != r.end() && it->first == col) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  } else if (value != 0) {
    r.insert(it, {col, value});
  }
}

long SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = data_.at(row);
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  return (it != r.end() && it->first == col) ? it->second : 0;
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto [c, v] : data_[r]) out.push_back({r, c, v});
  return out;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("sparse matrix shape mismatch");
  SparseIntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, long> acc;
    for (auto [k, a] : data_[r])
      for (auto [c, b] : other.data_[k]) acc[c] += a * b;
    for (auto [c, v] : acc)
      if (v != 0) out.data_[r].push_back({c, v});
  }
  return out;
}

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow instead of wrapping.
struct Checked {
  using Int = long;
  static Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Int gcd(Int a, Int b) { return std::gcd(a, b); }
  static Int div(Int a, Int b) { return a / b; }
  static bool is_zero(Int a) { return a == 0; }
  static Int from_long(long a) { return a; }
};

struct Big {
  using Int = mpz_class;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static Int div(const Int& a, const Int& b) {
    Int out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static Int from_long(long a) { return Int(a); }
};

// Reduces each incoming row against the stored pivot rows (keyed by leading
// column) with the integer update  row <- p*row - a*pivot,  then divides the
// row by the gcd of its entries. Every stored row is a pivot, so the rank is
// the number of stored rows. Swapping a row with its pivot keeps the span.
template <typename Ops>
std::size_t reduce_rows(const SparseIntMatrix& m) {
  using Int = typename Ops::Int;
  using Row = std::vector<std::pair<std::size_t, Int>>;
  std::vector<Row> pivots;
  std::vector<std::size_t> pivot_of_col(m.cols(), std::numeric_limits<std::size_t>::max());

  // Short rows first keeps fill-in low.
  std::vector<std::size_t> order(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });

  Row row;
  Row scratch;
  for (std::size_t r : order) {
    row.clear();
    for (auto [c, v] : m.row(r)) row.push_back({c, Ops::from_long(v)});
    while (!row.empty()) {
      std::size_t lead = row.front().first;
      std::size_t p = pivot_of_col[lead];
      if (p == std::numeric_limits<std::size_t>::max()) {
        Int content = row.front().second;
        for (const auto& entry : row) content = Ops::gcd(content, entry.second);
        if (content < 0) content = -content;
        if (content != 1)
          for (auto& entry : row) entry.second = Ops::div(entry.second, content);
        pivot_of_col[lead] = pivots.size();
        pivots.push_back(row);
        break;
      }
      // Keep the shorter of the two rows as the pivot to limit fill-in.
      if (row.size() < pivots[p].size()) row.swap(pivots[p]);
      const Row& pivot = pivots[p];
      Int g = Ops::gcd(row.front().second, pivot.front().second);
      Int scale_row = Ops::div(pivot.front().second, g);
      Int scale_pivot = Ops::div(row.front().second, g);
      scratch.clear();
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          scratch.push_back({row[i].first, Ops::mul(scale_row, row[i].second)});
          ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          scratch.push_back({pivot[j].first, Ops::sub(Ops::from_long(0), Ops::mul(scale_pivot, pivot[j].second))});
          ++j;
        } else {
          Int v = Ops::sub(Ops::mul(scale_row, row[i].second), Ops::mul(scale_pivot, pivot[j].second));
          if (!Ops::is_zero(v)) scratch.push_back({row[i].first, v});
          ++i;
          ++j;
        }
      }
      if (!scratch.empty()) {
        Int content = scratch.front().second;
        for (const auto& entry : scratch) content = Ops::gcd(content, entry.second);
        if (content < 0) content = -content;
        if (content != 1)
          for (auto& entry : scratch) entry.second = Ops::div(entry.second, content);
      }
      row.swap(scratch);
    }
  }
  return pivots.size();
}

// A matrix whose rows each hold one +1 and one -1 is the incidence matrix of
// a graph on its columns; its rank is columns minus components.
std::optional<std::size_t> incidence_rank(const SparseIntMatrix& m) {
  std::vector<std::size_t> parent(m.cols());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.size() != 2 || row[0].second + row[1].second != 0 ||
        (row[0].second != 1 && row[0].second != -1))
      return std::nullopt;
    std::size_t a = find(row[0].first), b = find(row[1].first);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t rational_rank(const SparseIntMatrix& m) {
  if (auto rank = incidence_rank(m)) return *rank;
  try {
    return reduce_rows<Checked>(m);
  } catch (const Overflow&) {
    return reduce_rows<Big>(m);
  }
}

std::size_t rational_rank_dense(const SparseIntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
  for (const Triplet& t : m.triplets()) a[t.row][t.col] = t.value;

  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      a[r][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace gbtc
