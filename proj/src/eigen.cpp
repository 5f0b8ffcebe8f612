#include "fivefour/eigen.hpp"

#include "fivefour/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fivefour {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p,q) with one Jacobi rotation, accumulating it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

EigenDecomposition symmetric_eigen(const Matrix& input, const EigenOptions& options) {
    const std::size_t n = input.rows();
    if (n == 0 || input.cols() != n) {
        throw DataError("symmetric_eigen needs a nonempty square matrix");
    }
    const double scale = frobenius_norm(input);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(input(i, j) - input(j, i)) > options.symmetry_tolerance * std::max(1.0, scale)) {
                throw DataError("symmetric_eigen: input is not symmetric");
            }
        }
    }

    Matrix a = input;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = a(j, i) = 0.5 * (input(i, j) + input(j, i));
        }
    }
    Matrix v = Matrix::identity(n);
    const double threshold = options.off_diagonal_tolerance * scale;
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweep == options.max_sweeps) {
            std::ostringstream msg;
            msg << "symmetric_eigen: no convergence after " << sweep << " sweeps (off-diagonal norm "
                << off_diagonal_norm(a) << ", threshold " << threshold << ")";
            throw DataError(msg.str());
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) != 0.0) {
                    rotate(a, v, p, q);
                }
            }
        }
    }

    // Sign rule: first component with magnitude above the noise floor is positive.
    const double noise = 1e-12;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(v(i, k)) > noise) {
                if (v(i, k) < 0.0) {
                    for (std::size_t r = 0; r < n; ++r) {
                        v(r, k) = -v(r, k);
                    }
                }
                break;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const double tie = 1e-12 * std::max(1.0, scale);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (std::abs(a(x, x) - a(y, y)) > tie) {
            return a(x, x) > a(y, y);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(v(i, x) - v(i, y)) > noise) {
                return v(i, x) > v(i, y);
            }
        }
        return false;
    });

    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

double reconstruction_residual(const Matrix& a, const EigenDecomposition& eig) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
            }
            worst = std::max(worst, std::abs(a(i, j) - sum));
        }
    }
    return worst;
}

double orthonormality_residual(const Matrix& v) {
    double worst = 0.0;
    for (std::size_t p = 0; p < v.cols(); ++p) {
        for (std::size_t q = 0; q < v.cols(); ++q) {
            double dot = 0.0;
            for (std::size_t i = 0; i < v.rows(); ++i) {
                dot += v(i, p) * v(i, q);
            }
            worst = std::max(worst, std::abs(dot - (p == q ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace fivefour
