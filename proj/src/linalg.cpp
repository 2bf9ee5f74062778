#include "qillum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qillum {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

// Sweep cap for the Jacobi iteration. Quadratic convergence means a handful
// of sweeps suffice for any matrix this library is meant for.
constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm_sq(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return sum;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
  if (entries_.size() != dim * dim) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> psi) {
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  }
  return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  // Tr[a^dagger b] = sum_ij conj(a_ij) b_ij
  Complex sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) sum += std::conj(ea[k]) * eb[k];
  return sum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_left, std::size_t d_right,
                            TraceSide side) {
  if (d_left == 0 || d_right == 0 || m.dim() != d_left * d_right) {
    throw DimensionError("partial_trace: matrix dim " + std::to_string(m.dim()) +
                         " != " + std::to_string(d_left) + " x " + std::to_string(d_right));
  }
  if (side == TraceSide::Left) {
    ComplexMatrix out(d_right);
    for (std::size_t k = 0; k < d_right; ++k) {
      for (std::size_t l = 0; l < d_right; ++l) {
        Complex sum = 0.0;
        for (std::size_t i = 0; i < d_left; ++i) sum += m(i * d_right + k, i * d_right + l);
        out(k, l) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out(d_left);
  for (std::size_t i = 0; i < d_left; ++i) {
    for (std::size_t j = 0; j < d_left; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < d_right; ++k) sum += m(i * d_right + k, j * d_right + k);
      out(i, j) = sum;
    }
  }
  return out;
}

EigenDecomposition eigh(const ComplexMatrix& m, double tol) {
  const double defect = m.hermitian_defect();
  if (!(defect <= tol)) {
    throw NotHermitianError("eigh: Hermitian defect " + std::to_string(defect) +
                            " exceeds tolerance " + std::to_string(tol));
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob_sq = 0.0;
  for (const auto& e : a.entries()) frob_sq += std::norm(e);
  const double stop_sq = frob_sq * 1e-28;

  int sweep = 0;
  while (off_diagonal_norm_sq(a) > stop_sq) {
    if (++sweep > kMaxJacobiSweeps) {
      throw ConvergenceError("eigh: no convergence after " + std::to_string(kMaxJacobiSweeps) +
                             " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double abs_pp = std::abs(a(p, p).real());
        const double abs_qq = std::abs(a(q, q).real());
        if (sweep > 4 && abs_pp + 100.0 * mag == abs_pp && abs_qq + 100.0 * mag == abs_qq) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Phase-rotate column q so the pivot is real, then apply a real
        // Jacobi rotation: U = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, src);
  }
  return out;
}

ComplexMatrix reconstruct(const EigenDecomposition& decomposition) {
  const auto& vecs = decomposition.eigenvectors;
  const std::size_t n = vecs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += vecs(i, k) * decomposition.eigenvalues[k] * std::conj(vecs(j, k));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix& m, double tol) {
  const auto decomposition = eigh(m, tol);
  double sum = 0.0;
  for (double lambda : decomposition.eigenvalues) sum += std::abs(lambda);
  return sum;
}

}  // namespace qillum
