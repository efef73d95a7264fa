/// @file state.hpp
/// @brief Small fixed-capacity state vectors and matrices for 1D conservation-law systems.

#ifndef OVERSET_STATE_HPP
#define OVERSET_STATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace overset {

/// Largest number of conserved components among the supported systems (Euler: 3).
inline constexpr int kMaxComponents = 3;

/// Thrown when a state violates a system's admissibility set (h > 0, rho > 0, p > 0, ...).
/// The message names the violated constraint; callers may add cell/time context.
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on invalid configuration or precondition violations (geometry, grid sizes, eta range, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Conserved state vector with p <= kMaxComponents entries.
/// Value type; all arithmetic is componentwise.
class State {
public:
    State() = default;

    explicit State(int size, double fill = 0.0) : size_(size) {
        if (size < 1 || size > kMaxComponents)
            throw ValidationError("State size must be in [1," + std::to_string(kMaxComponents) + "]");
        data_.fill(0.0);
        for (int i = 0; i < size_; ++i) data_[static_cast<std::size_t>(i)] = fill;
    }

    State(std::initializer_list<double> vals) : size_(static_cast<int>(vals.size())) {
        if (size_ < 1 || size_ > kMaxComponents)
            throw ValidationError("State initializer size must be in [1,3]");
        data_.fill(0.0);
        int i = 0;
        for (double v : vals) data_[static_cast<std::size_t>(i++)] = v;
    }

    static State zero(int size) { return State(size, 0.0); }

    int size() const { return size_; }

    double& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

    State& operator+=(const State& o) {
        for (int i = 0; i < size_; ++i) data_[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    State& operator-=(const State& o) {
        for (int i = 0; i < size_; ++i) data_[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    State& operator*=(double a) {
        for (int i = 0; i < size_; ++i) data_[static_cast<std::size_t>(i)] *= a;
        return *this;
    }

    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(double a, State b) { return b *= a; }
    friend State operator*(State b, double a) { return b *= a; }

    friend bool operator==(const State& a, const State& b) {
        if (a.size_ != b.size_) return false;
        for (int i = 0; i < a.size_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    double dot(const State& o) const {
        double s = 0.0;
        for (int i = 0; i < size_; ++i) s += data_[static_cast<std::size_t>(i)] * o[i];
        return s;
    }

    double norm_inf() const {
        double m = 0.0;
        for (int i = 0; i < size_; ++i) m = std::max(m, std::abs(data_[static_cast<std::size_t>(i)]));
        return m;
    }

    bool all_finite() const {
        for (int i = 0; i < size_; ++i)
            if (!std::isfinite(data_[static_cast<std::size_t>(i)])) return false;
        return true;
    }

private:
    std::array<double, kMaxComponents> data_{};
    int size_ = 0;
};

/// Dense p x p matrix for penalty coefficients (Sigma_u, Sigma_v).
class SmallMatrix {
public:
    SmallMatrix() = default;
    explicit SmallMatrix(int n, double diag = 0.0) : n_(n) {
        data_.fill(0.0);
        for (int i = 0; i < n_; ++i) (*this)(i, i) = diag;
    }

    static SmallMatrix identity(int n, double scale = 1.0) { return SmallMatrix(n, scale); }

    int size() const { return n_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * kMaxComponents + j)]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * kMaxComponents + j)]; }

    State apply(const State& x) const {
        State y = State::zero(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    SmallMatrix scaled(double a) const {
        SmallMatrix m = *this;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) *= a;
        return m;
    }

    /// Symmetric positive definiteness via Sylvester's criterion (p <= 3).
    bool is_spd(double sym_tol = 1e-12) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > sym_tol) return false;
        const auto& m = *this;
        double m1 = m(0, 0);
        if (n_ == 1) return m1 > 0.0;
        double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (n_ == 2) return m1 > 0.0 && m2 > 0.0;
        double m3 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                    m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                    m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        return m1 > 0.0 && m2 > 0.0 && m3 > 0.0;
    }

private:
    std::array<double, kMaxComponents * kMaxComponents> data_{};
    int n_ = 0;
};

}  // namespace overset

#endif
