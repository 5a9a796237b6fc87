#include "pglcat/cyclo_matrix.hpp"

#include <numeric>
#include <sstream>

#include "pglcat/errors.hpp"

namespace pglcat {

namespace {
unsigned lcm_mod(unsigned a, unsigned b) {
  return static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a, b));
}
}  // namespace

CycloMatrix::CycloMatrix(unsigned size, unsigned modulus)
    : size_(size), modulus_(modulus), entries_(size * size, CycloNumber(Rat(0), modulus)) {}

CycloMatrix CycloMatrix::identity(unsigned size, unsigned modulus) {
  CycloMatrix m(size, modulus);
  for (unsigned i = 0; i < size; ++i) m.set(i, i, CycloNumber(Rat(1), modulus));
  return m;
}

const CycloNumber& CycloMatrix::at(unsigned row, unsigned col) const {
  return entries_[row * size_ + col];
}

void CycloMatrix::set(unsigned row, unsigned col, CycloNumber value) {
  if (value.modulus() != modulus_) value = value.embedded(modulus_);
  entries_[row * size_ + col] = std::move(value);
}

CycloMatrix CycloMatrix::embedded(unsigned new_modulus) const {
  CycloMatrix m(size_, new_modulus);
  for (unsigned i = 0; i < size_; ++i)
    for (unsigned j = 0; j < size_; ++j) m.set(i, j, at(i, j).embedded(new_modulus));
  return m;
}

CycloMatrix CycloMatrix::scaled(const CycloNumber& c) const {
  CycloMatrix m = *this;
  for (auto& e : m.entries_) e = e * c;
  return m;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& other) const {
  unsigned mod = modulus_ == other.modulus_
                     ? modulus_
                     : lcm_mod(modulus_, other.modulus_);
  CycloMatrix out(size_ * other.size_, mod);
  for (unsigned i = 0; i < size_; ++i)
    for (unsigned j = 0; j < size_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (unsigned k = 0; k < other.size_; ++k)
        for (unsigned l = 0; l < other.size_; ++l) {
          if (other.at(k, l).is_zero()) continue;
          out.set(i * other.size_ + k, j * other.size_ + l, at(i, j) * other.at(k, l));
        }
    }
  return out;
}

CycloNumber CycloMatrix::determinant() const {
  // Gaussian elimination with exact division; track row-swap sign.
  CycloMatrix work = *this;
  CycloNumber det(Rat(1), modulus_);
  bool negate = false;
  for (unsigned col = 0; col < size_; ++col) {
    unsigned pivot = col;
    while (pivot < size_ && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == size_) return CycloNumber(Rat(0), modulus_);
    if (pivot != col) {
      for (unsigned j = 0; j < size_; ++j) {
        CycloNumber tmp = work.at(col, j);
        work.set(col, j, work.at(pivot, j));
        work.set(pivot, j, tmp);
      }
      negate = !negate;
    }
    CycloNumber p = work.at(col, col);
    det = det * p;
    CycloNumber pinv = p.inverse();
    for (unsigned r = col + 1; r < size_; ++r) {
      if (work.at(r, col).is_zero()) continue;
      CycloNumber factor = work.at(r, col) * pinv;
      for (unsigned j = col; j < size_; ++j)
        work.set(r, j, work.at(r, j) - factor * work.at(col, j));
    }
  }
  return negate ? -det : det;
}

bool CycloMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
  if (a.modulus_ != b.modulus_) {
    unsigned m = lcm_mod(a.modulus_, b.modulus_);
    return a.embedded(m) * b.embedded(m);
  }
  CycloMatrix out(a.size_, a.modulus_);
  for (unsigned i = 0; i < a.size_; ++i)
    for (unsigned k = 0; k < a.size_; ++k) {
      const CycloNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < a.size_; ++j) {
        const CycloNumber& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.set(i, j, out.at(i, j) + aik * bkj);
      }
    }
  return out;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
  CycloMatrix out(a.size_, a.modulus_);
  for (unsigned i = 0; i < a.size_; ++i)
    for (unsigned j = 0; j < a.size_; ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
  return out;
}

bool CycloMatrix::operator==(const CycloMatrix& other) const {
  if (size_ != other.size_) return false;
  if (modulus_ != other.modulus_) {
    unsigned m = lcm_mod(modulus_, other.modulus_);
    return embedded(m) == other.embedded(m);
  }
  return entries_ == other.entries_;
}

std::string CycloMatrix::key() const {
  std::string out;
  out.reserve(entries_.size() * 8);
  for (const auto& e : entries_) e.append_key(out);
  return out;
}

std::string CycloMatrix::dump() const {
  std::ostringstream os;
  os << "N=" << modulus_ << "\n";
  for (unsigned i = 0; i < size_; ++i) {
    for (unsigned j = 0; j < size_; ++j) {
      if (j) os << " | ";
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

ProjectiveMatrix ProjectiveMatrix::normalize(const CycloMatrix& m) {
  for (unsigned i = 0; i < m.size(); ++i)
    for (unsigned j = 0; j < m.size(); ++j) {
      if (!m.at(i, j).is_zero()) {
        return ProjectiveMatrix{m.scaled(m.at(i, j).inverse())};
      }
    }
  throw DomainError("cannot normalize the zero matrix");
}

std::vector<std::vector<CycloNumber>> eigenvectors(const CycloMatrix& m,
                                                   const CycloNumber& lambda) {
  const unsigned n = m.size();
  const unsigned mod = m.modulus();
  // Row-reduce m - lambda*I and read off the kernel.
  std::vector<std::vector<CycloNumber>> rows(n, std::vector<CycloNumber>(n, CycloNumber(Rat(0), mod)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      rows[i][j] = m.at(i, j);
      if (i == j) rows[i][j] = rows[i][j] - lambda.embedded(mod);
    }
  std::vector<int> pivot_col_of_row(n, -1);
  std::vector<bool> is_pivot_col(n, false);
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned pr = rank;
    while (pr < n && rows[pr][col].is_zero()) ++pr;
    if (pr == n) continue;
    std::swap(rows[pr], rows[rank]);
    CycloNumber inv = rows[rank][col].inverse();
    for (unsigned j = 0; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (unsigned r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      CycloNumber f = rows[r][col];
      for (unsigned j = 0; j < n; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    pivot_col_of_row[rank] = static_cast<int>(col);
    is_pivot_col[col] = true;
    ++rank;
  }
  std::vector<std::vector<CycloNumber>> basis;
  for (unsigned free_col = 0; free_col < n; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<CycloNumber> v(n, CycloNumber(Rat(0), mod));
    v[free_col] = CycloNumber(Rat(1), mod);
    for (unsigned r = 0; r < rank; ++r) {
      int pc = pivot_col_of_row[r];
      v[static_cast<unsigned>(pc)] = -rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pglcat
