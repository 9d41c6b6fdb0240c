#include "gbsknot/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace gbsknot {
namespace {

using Position = std::pair<std::size_t, std::size_t>;

std::optional<Position> smallest_nonzero(const IntMatrix& m, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t r = from; r < m.rows(); ++r) {
    for (std::size_t c = from; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Integer a = abs(m(r, c));
      if (!best || a < best_abs) {
        best = Position{r, c};
        best_abs = std::move(a);
      }
    }
  }
  return best;
}

// Subtracts q * row `src` from row `dst`, over columns [from, cols).
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
  for (std::size_t r = from; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  std::vector<Integer> padded = row;
  padded.resize(cols_);
  data_.insert(data_.end(), padded.begin(), padded.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = smallest_nonzero(m, t);
    if (!pivot) break;
    m.swap_rows(t, pivot->first);
    m.swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(m, r, t, m(r, t) / m(t, t), t);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(m, c, t, m(t, c) / m(t, t), t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to (t, t).
        Position best{t, t};
        for (std::size_t r = t + 1; r < m.rows(); ++r) {
          if (m(r, t) != 0 && abs(m(r, t)) < abs(m(best.first, best.second))) best = {r, t};
        }
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (m(t, c) != 0 && abs(m(t, c)) < abs(m(best.first, best.second))) best = {t, c};
        }
        m.swap_rows(t, best.first);
        m.swap_cols(t, best.second);
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < m.rows() && !offending; ++r) {
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (m(r, c) % m(t, t) != 0) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) break;
      row_axpy(m, t, *offending, Integer(-1), t);
    }
    out.divisors.push_back(abs(m(t, t)));
  }
  out.free_rank = m.cols() - out.divisors.size();
  return out;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Bezout b = extended_gcd(m(r, c), m(i, c));
      const Integer ar = m(r, c) / b.g;
      const Integer ai = m(i, c) / b.g;
      for (std::size_t k = c; k < m.cols(); ++k) {
        Integer top = b.x * m(r, k) + b.y * m(i, k);
        Integer bottom = ai * m(r, k) - ar * m(i, k);
        m(r, k) = std::move(top);
        m(i, k) = std::move(bottom);
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = -m(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (m(i, c) == 0) continue;
      row_axpy(m, i, r, floor_div(m(i, c), m(r, c)), c);
    }
    ++r;
  }
  IntMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

}  // namespace gbsknot
