#include "apolar/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
    }
    Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) {
      if (!a(lead, k).is_zero()) a(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        if (!a(lead, k).is_zero()) a(r, k) -= f * a(lead, k);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec RowSpace::reduce(const SparseVec& v) const {
  if (v.empty()) return {};
  std::vector<Scalar> acc(dim_);
  std::size_t lo = dim_;
  for (const auto& [i, c] : v) {
    if (i >= dim_) throw std::out_of_range("RowSpace::reduce index");
    acc[i] = c;
    lo = std::min(lo, i);
  }
  for (std::size_t c = lo; c < dim_; ++c) {
    if (acc[c].is_zero() || pivot_row_[c] < 0) continue;
    Scalar f = acc[c];
    for (const auto& [k, e] : rows_[static_cast<std::size_t>(pivot_row_[c])]) acc[k] -= f * e;
  }
  return sparse_from_dense(acc);
}

bool RowSpace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  insert_reduced(std::move(r));
  return true;
}

void RowSpace::insert_reduced(SparseVec r) {
  Scalar inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
}

std::vector<std::size_t> RowSpace::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<SparseVec> RowSpace::reduced_basis() const {
  auto piv = pivots();
  std::vector<SparseVec> out(piv.size());
  for (std::size_t k = piv.size(); k-- > 0;) {
    SparseVec row = rows_[static_cast<std::size_t>(pivot_row_[piv[k]])];
    for (std::size_t l = k + 1; l < piv.size(); ++l) {
      auto it = std::lower_bound(row.begin(), row.end(), piv[l],
                                 [](const auto& e, std::size_t idx) { return e.first < idx; });
      if (it != row.end() && it->first == piv[l]) {
        Scalar f = -it->second;
        axpy(row, f, out[l]);
      }
    }
    out[k] = std::move(row);
  }
  return out;
}

LinearMap::LinearMap(std::size_t codomain_dim, const std::vector<SparseVec>& columns)
    : m_(codomain_dim), n_(columns.size()), space_(codomain_dim + columns.size()) {
  for (std::size_t j = 0; j < n_; ++j) {
    SparseVec v = columns[j];
    v.emplace_back(m_ + j, Scalar(1));
    SparseVec r = space_.reduce(v);
    if (r.front().first >= m_) {
      for (auto& e : r) e.first -= m_;
      kernel_.push_back(std::move(r));
    } else {
      space_.insert(r);
    }
  }
}

std::optional<SparseVec> LinearMap::solve(const SparseVec& b) const {
  SparseVec r = space_.reduce(b);
  if (!r.empty() && r.front().first < m_) return std::nullopt;
  for (auto& e : r) {
    e.first -= m_;
    e.second = -e.second;
  }
  return r;
}

}  // namespace apolar
