#pragma once

#include <cmath>
#include <complex>

namespace flagbundle {

/// First-order dual number value + eps * tangent, eps^2 = 0.
template <typename T>
struct Dual {
    T value{};
    T eps{};

    constexpr Dual() = default;
    constexpr Dual(T v) : value(v) {}  // NOLINT: implicit lift of constants
    constexpr Dual(T v, T e) : value(v), eps(e) {}

    Dual& operator+=(const Dual& o) { value += o.value; eps += o.eps; return *this; }
    Dual& operator-=(const Dual& o) { value -= o.value; eps -= o.eps; return *this; }
    Dual& operator*=(const Dual& o) {
        eps = eps * o.value + value * o.eps;
        value *= o.value;
        return *this;
    }
    Dual& operator/=(const Dual& o) {
        eps = (eps * o.value - value * o.eps) / (o.value * o.value);
        value /= o.value;
        return *this;
    }
};

template <typename T> Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <typename T> Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <typename T> Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <typename T> Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }
template <typename T> Dual<T> operator-(const Dual<T>& a) { return {-a.value, -a.eps}; }

template <typename T>
bool operator==(const Dual<T>& a, const Dual<T>& b) { return a.value == b.value && a.eps == b.eps; }

template <typename T>
Dual<T> conj(const Dual<T>& a) { return {std::conj(a.value), std::conj(a.eps)}; }

template <typename T>
Dual<T> log(const Dual<T>& a) {
    using std::log;
    return {log(a.value), a.eps / a.value};
}

}  // namespace flagbundle
