// Copyright 2026 The chibench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Dense complex linear algebra at desk scale (dims up to a few dozen).
// All values are immutable once built up; every function is pure.

namespace chibench {

using Complex = std::complex<double>;

inline void ensure_finite(const Complex& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

class ComplexVector {
  public:
    ComplexVector() = default;

    explicit ComplexVector(int dim) : amps_(check_dim(dim)) {}

    ComplexVector(int dim, std::vector<Complex> amps) : amps_(std::move(amps)) {
        check_dim(dim);
        if (static_cast<int>(amps_.size()) != dim) {
            throw std::invalid_argument("ComplexVector: amplitude count != dim");
        }
        for (const auto& a : amps_) ensure_finite(a, "ComplexVector");
    }

    int dim() const { return static_cast<int>(amps_.size()); }

    const Complex& operator[](int i) const { return amps_[static_cast<size_t>(i)]; }
    Complex& operator[](int i) { return amps_[static_cast<size_t>(i)]; }

    const std::vector<Complex>& amps() const { return amps_; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

  private:
    static int check_dim(int dim) {
        if (dim <= 0) throw std::invalid_argument("ComplexVector: dim must be positive");
        return dim;
    }
    std::vector<Complex> amps_;
};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), entries_(static_cast<size_t>(dim) * dim) {}

    // Row-major entries, length dim*dim.
    ComplexMatrix(int dim, std::vector<Complex> entries)
        : dim_(check_dim(dim)), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(dim) * dim) {
            throw std::invalid_argument("ComplexMatrix: entry count != dim*dim");
        }
        for (const auto& e : entries_) ensure_finite(e, "ComplexMatrix");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        const int dim = static_cast<int>(rows.size());
        ComplexMatrix m(dim);
        int r = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim) {
                throw std::invalid_argument("ComplexMatrix: ragged initializer");
            }
            int c = 0;
            for (const auto& z : row) {
                ensure_finite(z, "ComplexMatrix");
                m(r, c++) = z;
            }
            ++r;
        }
        return m;
    }

    int dim() const { return dim_; }

    const Complex& operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }
    Complex& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }

  private:
    static int check_dim(int dim) {
        if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
        return dim;
    }
    int dim_ = 0;
    std::vector<Complex> entries_;
};

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix product");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    const int n = m.dim();
    ComplexVector out(n);
    for (int i = 0; i < n; ++i) {
        Complex s{};
        for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix difference");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix sum");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline ComplexMatrix operator*(const Complex& s, const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s * m(i, j);
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

inline Complex trace(const ComplexMatrix& m) {
    Complex t{};
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

inline double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("vector difference: dimension mismatch");
    double v = 0.0;
    for (int i = 0; i < a.dim(); ++i) v = std::max(v, std::abs(a[i] - b[i]));
    return v;
}

// <a|b>, conjugate-linear in the first argument.
inline Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner product: dimension mismatch");
    Complex s{};
    for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline ComplexVector normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (n <= 0.0) throw std::invalid_argument("normalized: zero vector");
    ComplexVector out(v.dim());
    for (int i = 0; i < v.dim(); ++i) out[i] = v[i] / n;
    return out;
}

// |v><v|
inline ComplexMatrix outer(const ComplexVector& v) {
    const int n = v.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = v[i] * std::conj(v[j]);
    return out;
}

// Kronecker product; the left factor carries the most significant index:
// out(i*db+k, j*db+l) = a(i,j) * b(k,l).
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
    const int da = a.dim(), db = b.dim();
    ComplexVector out(da * db);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < db; ++k) out[i * db + k] = a[i] * b[k];
    return out;
}

inline bool is_unitary(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("is_unitary: tol must be positive");
    return max_abs_diff(adjoint(m) * m, ComplexMatrix::identity(m.dim())) <= tol;
}

// True iff u == exp(i*phi) * v for some phi, within tol (max-abs-entry).
// phi is read off the largest-magnitude entry of v.
inline bool global_phase_equal(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
    require_same_dim(u, v, "global_phase_equal");
    if (tol <= 0.0) throw std::invalid_argument("global_phase_equal: tol must be positive");
    int br = 0, bc = 0;
    double best = 0.0;
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j)
            if (std::abs(v(i, j)) > best) {
                best = std::abs(v(i, j));
                br = i;
                bc = j;
            }
    if (best == 0.0) throw std::invalid_argument("global_phase_equal: zero reference matrix");
    const Complex ratio = u(br, bc) / v(br, bc);
    if (std::abs(ratio) == 0.0) return false;
    const Complex phase = ratio / std::abs(ratio);
    return max_abs_diff(u, phase * v) <= tol;
}

inline double hermitian_deviation(const ComplexMatrix& m) { return max_abs_diff(m, adjoint(m)); }

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns; m * V = V * diag(eigenvalues)
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Sweeps until the largest off-diagonal magnitude drops below 1e-14
// (or 100 sweeps). Dimensions here never exceed 36.
inline EigenResult hermitian_eigen(const ComplexMatrix& m) {
    if (hermitian_deviation(m) > 1e-10) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
    }
    const int n = m.dim();
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < kOffTol) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < kOffTol) continue;
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Right-multiply columns p,q of a and v by the rotation,
                // then left-multiply rows p,q of a by its adjoint.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenResult result;
    result.eigenvalues.reserve(static_cast<size_t>(n));
    result.eigenvectors = ComplexMatrix(n);
    for (int col = 0; col < n; ++col) {
        result.eigenvalues.push_back(a(order[col], order[col]).real());
        for (int row = 0; row < n; ++row) result.eigenvectors(row, col) = v(row, order[col]);
    }
    return result;
}

// Partial trace of a density matrix over the subsystems NOT listed in keep.
// dims gives the subsystem dimensions left-to-right (left factor most
// significant); keep must be strictly ascending.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
    const int num_subsystems = static_cast<int>(dims.size());
    long total = 1;
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("partial_trace: subsystem dims must be positive");
        total *= d;
    }
    if (total != rho.dim()) throw std::invalid_argument("partial_trace: dims do not factor rho");
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= num_subsystems) throw std::invalid_argument("partial_trace: keep index out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("partial_trace: keep must be strictly ascending");
    }

    std::vector<bool> kept(static_cast<size_t>(num_subsystems), false);
    for (int k : keep) kept[static_cast<size_t>(k)] = true;

    int kept_dim = 1;
    for (int k : keep) kept_dim *= dims[static_cast<size_t>(k)];

    auto digits_of = [&](int index) {
        std::vector<int> digits(static_cast<size_t>(num_subsystems));
        for (int s = num_subsystems - 1; s >= 0; --s) {
            digits[static_cast<size_t>(s)] = index % dims[static_cast<size_t>(s)];
            index /= dims[static_cast<size_t>(s)];
        }
        return digits;
    };
    auto kept_index = [&](const std::vector<int>& digits) {
        int idx = 0;
        for (int s = 0; s < num_subsystems; ++s) {
            if (kept[static_cast<size_t>(s)]) idx = idx * dims[static_cast<size_t>(s)] + digits[static_cast<size_t>(s)];
        }
        return idx;
    };

    ComplexMatrix out(kept_dim);
    for (int i = 0; i < rho.dim(); ++i) {
        const auto di = digits_of(i);
        for (int j = 0; j < rho.dim(); ++j) {
            const auto dj = digits_of(j);
            bool traced_match = true;
            for (int s = 0; s < num_subsystems; ++s) {
                if (!kept[static_cast<size_t>(s)] && di[static_cast<size_t>(s)] != dj[static_cast<size_t>(s)]) {
                    traced_match = false;
                    break;
                }
            }
            if (traced_match) out(kept_index(di), kept_index(dj)) += rho(i, j);
        }
    }
    return out;
}

// Clamp tolerance for eigenvalues that are negative only through roundoff.
inline constexpr double kPsdClampTol = 1e-10;

// Hermitian PSD square root via eigendecomposition. Eigenvalues below
// -1e-10 are rejected; anything else inside the clamp band is treated as
// an exact zero, so roundoff noise in rank-deficient inputs cannot leak
// through the square root amplified to sqrt(eps) scale.
inline ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    const EigenResult eig = hermitian_eigen(m);
    const int n = m.dim();
    ComplexMatrix out(n);
    for (size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -kPsdClampTol) throw std::invalid_argument("matrix_sqrt_psd: matrix is not PSD");
        if (lambda < kPsdClampTol) lambda = 0.0;
        const double root = std::sqrt(lambda);
        for (int i = 0; i < n; ++i) {
            const Complex vi = eig.eigenvectors(i, static_cast<int>(k));
            if (vi == Complex{}) continue;
            for (int j = 0; j < n; ++j) {
                out(i, j) += root * vi * std::conj(eig.eigenvectors(j, static_cast<int>(k)));
            }
        }
    }
    // Symmetrize away the last bits of rounding.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    return out;
}

// Von Neumann entropy in bits of a unit-trace Hermitian PSD matrix.
inline double vn_entropy(const ComplexMatrix& rho) {
    if (std::abs(trace(rho).real() - 1.0) > 1e-9 || std::abs(trace(rho).imag()) > 1e-9) {
        throw std::invalid_argument("vn_entropy: trace must be 1");
    }
    const EigenResult eig = hermitian_eigen(rho);
    double entropy = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -kPsdClampTol) throw std::invalid_argument("vn_entropy: matrix is not PSD");
        if (lambda <= 0.0) continue;
        entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

}  // namespace chibench
