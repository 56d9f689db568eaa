#pragma once

// Exact rational scalars and dense matrices, with row reduction, rank and
// kernel computation. All arithmetic is carried out in GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace cayley {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  template <typename Int>
    requires std::is_integral_v<Int>
  Rational(Int n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<Int>) {
      value_ = mpq_class(mpz_class(static_cast<long>(n)));
    } else {
      value_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
    }
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading minus sign on p.
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    const auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const std::string_view num = text.substr(0, slash);
    if (!digits_ok(num, true)) return fail();
    mpz_class p(std::string(num), 10);
    mpz_class q(1);
    if (slash != std::string_view::npos) {
      const std::string_view den = text.substr(slash + 1);
      if (!digits_ok(den, false)) return fail();
      q = mpz_class(std::string(den), 10);
      if (q == 0) return fail();
    }
    return Rational(p, q);
  }

  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Fused a -= b * c, avoiding a temporary.
  void submul(const Rational& b, const Rational& c) { value_ -= b.value_ * c.value_; }

 private:
  mpq_class value_{0};
};

using QVector = std::vector<Rational>;

inline Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  mpq_class acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].value() * b[i].value();
  return Rational(std::move(acc));
}

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("QMatrix: entry count mismatch");
  }
  /// Builds from nested rows; all rows must share one length.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("QMatrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  QVector row(std::size_t r) const {
    return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  QVector col(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix product: shape mismatch");
    QMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
        }
      }
    return p;
  }
  QVector operator*(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix-vector product: shape mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      mpq_class acc(0);
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c).value() * v[c].value();
      out[r] = Rational(std::move(acc));
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
  }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination; the pivot in each
/// column is the first nonzero entry at or below the current row.
inline RowEchelon row_reduce(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c).submul(factor, m(row, c));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return row_reduce(m).rank(); }

/// Columns of the result span the right null space of m.
inline QMatrix kernel_basis(const QMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) k(e.pivot_cols[r], f) = -e.reduced(r, free_cols[f]);
  }
  return k;
}

/// Sparse vector as (index, value) pairs sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Row space maintained incrementally in echelon form. Used where many
/// mostly-dependent sparse rows are fed in and only the span matters.
class IncrementalRowSpace {
 public:
  explicit IncrementalRowSpace(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }

  /// Adds a row to the span; returns true when it was independent.
  bool insert(const SparseVector& v) {
    std::map<std::size_t, Rational> acc(v.begin(), v.end());
    while (!acc.empty()) {
      auto it = acc.begin();
      if (it->second.is_zero()) {
        acc.erase(it);
        continue;
      }
      const std::size_t col = it->first;
      if (pivot_row_[col] == npos) {
        const Rational inv = Rational(1) / it->second;
        SparseVector row;
        row.reserve(acc.size());
        for (auto& [c, x] : acc)
          if (!x.is_zero()) row.emplace_back(c, x * inv);
        pivot_row_[col] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      eliminate(acc, it);
    }
    return false;
  }

  /// Residual of v modulo the span: supported only on non-pivot columns.
  SparseVector reduce(const SparseVector& v) const {
    std::map<std::size_t, Rational> acc(v.begin(), v.end());
    SparseVector out;
    while (!acc.empty()) {
      auto it = acc.begin();
      if (it->second.is_zero()) {
        acc.erase(it);
        continue;
      }
      if (pivot_row_[it->first] == npos) {
        out.emplace_back(it->first, it->second);
        acc.erase(it);
        continue;
      }
      eliminate(acc, it);
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void eliminate(std::map<std::size_t, Rational>& acc, std::map<std::size_t, Rational>::iterator lead) const {
    const SparseVector& prow = rows_[pivot_row_[lead->first]];
    const Rational factor = lead->second;
    acc.erase(lead);
    for (std::size_t t = 1; t < prow.size(); ++t) {
      auto [pos, inserted] = acc.try_emplace(prow[t].first);
      pos->second.submul(factor, prow[t].second);
      if (pos->second.is_zero()) acc.erase(pos);
    }
  }

  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

/// Row space of a batch of sparse rows, brought to echelon form by
/// fraction-free elimination with Markowitz pivoting (fewest expected
/// fill-ins first, ties broken by smallest pivot magnitude, then by index).
/// Rows are kept primitive over the integers, which keeps coefficient growth
/// in check on the very sparse relation matrices of the graded quotient.
class SparseRowEchelon {
 public:
  SparseRowEchelon() = default;
  SparseRowEchelon(std::size_t cols, const std::vector<SparseVector>& rows) : cols_(cols), pivot_of_col_(cols, npos) {
    std::vector<IntRow> work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
      IntRow ir = to_primitive(r);
      if (!ir.empty()) work.push_back(std::move(ir));
    }
    std::vector<std::vector<std::size_t>> col_rows(cols_);
    auto index_row = [&](std::size_t id) {
      for (const auto& e : work[id]) col_rows[e.first].push_back(id);
    };
    for (std::size_t id = 0; id < work.size(); ++id) index_row(id);
    std::vector<bool> active(work.size(), true);
    std::size_t live = work.size();

    while (live > 0 && pivots_.size() < cols_) {
      // Prune stale column entries, then pick the cheapest pivot.
      std::size_t best_row = npos, best_col = 0, best_cost = npos;
      std::size_t best_bits = npos;
      for (std::size_t id = 0; id < work.size(); ++id) {
        if (!active[id]) continue;
        const std::size_t rn = work[id].size() - 1;
        for (const auto& [c, x] : work[id]) {
          const std::size_t cost = rn * (count_active(col_rows[c], active, work, c) - 1);
          const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
          if (cost < best_cost || (cost == best_cost && bits < best_bits)) {
            best_cost = cost;
            best_bits = bits;
            best_row = id;
            best_col = c;
          }
        }
      }
      IntRow prow = std::move(work[best_row]);
      active[best_row] = false;
      --live;
      const mpz_class a = entry(prow, best_col);
      std::vector<std::size_t> hits = col_rows[best_col];
      std::sort(hits.begin(), hits.end());
      hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
      for (auto id : hits) {
        if (!active[id]) continue;
        const mpz_class b = entry(work[id], best_col);
        if (b == 0) continue;
        work[id] = combine(work[id], a, prow, b);
        if (work[id].empty()) {
          active[id] = false;
          --live;
        } else {
          index_row(id);
        }
      }
      pivot_of_col_[best_col] = pivots_.size();
      pivots_.push_back({best_col, std::move(prow)});
    }
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] != npos; }

  /// Residual of v modulo the row space, supported on non-pivot columns.
  SparseVector reduce(const SparseVector& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, x] : v)
      if (!x.is_zero()) acc[c] += x;
    for (const auto& [pc, row] : pivots_) {
      auto it = acc.find(pc);
      if (it == acc.end()) continue;
      const Rational factor = it->second / Rational(entry(row, pc), mpz_class(1));
      for (const auto& [c, x] : row) {
        auto [pos, inserted] = acc.try_emplace(c);
        pos->second.submul(factor, Rational(x, mpz_class(1)));
        if (pos->second.is_zero()) acc.erase(pos);
      }
    }
    return SparseVector(acc.begin(), acc.end());
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

  static mpz_class entry(const IntRow& r, std::size_t c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
    return it != r.end() && it->first == c ? it->second : mpz_class(0);
  }

  static std::size_t count_active(std::vector<std::size_t>& ids, const std::vector<bool>& active,
                                  const std::vector<IntRow>& work, std::size_t c) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    ids.erase(std::remove_if(ids.begin(), ids.end(), [&](std::size_t id) { return !active[id] || entry(work[id], c) == 0; }),
              ids.end());
    return ids.size();
  }

  static void make_primitive(IntRow& r) {
    mpz_class g(0);
    for (const auto& e : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g > 1)
      for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }

  static IntRow to_primitive(const SparseVector& v) {
    mpz_class den(1);
    for (const auto& [c, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    IntRow r;
    for (const auto& [c, x] : v) {
      if (x.is_zero()) continue;
      r.emplace_back(c, x.numerator() * (den / x.denominator()));
    }
    std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    make_primitive(r);
    return r;
  }

  /// a*r - b*p, made primitive; eliminates the pivot column when a = p[c], b = r[c].
  static IntRow combine(const IntRow& r, const mpz_class& a, const IntRow& p, const mpz_class& b) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t s = 0, t = 0;
    while (s < r.size() || t < p.size()) {
      mpz_class x;
      std::size_t c;
      if (t == p.size() || (s < r.size() && r[s].first < p[t].first)) {
        c = r[s].first;
        x = a * r[s++].second;
      } else if (s == r.size() || p[t].first < r[s].first) {
        c = p[t].first;
        x = -b * p[t++].second;
      } else {
        c = r[s].first;
        x = a * r[s++].second - b * p[t++].second;
      }
      if (x != 0) out.emplace_back(c, std::move(x));
    }
    make_primitive(out);
    return out;
  }

  std::size_t cols_ = 0;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<std::pair<std::size_t, IntRow>> pivots_;
};

}  // namespace cayley
