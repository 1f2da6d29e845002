#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace supermac {

// Exact coefficient scalar: arbitrary-precision rational. Float mode uses
// plain double. A computation fixes its mode through the template parameter
// of the engines; exact and float values never mix inside one pipeline.
using Rational = mpq_class;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain user input; CLI maps this to exit code 2.
struct InvalidInputError : Error {
    using Error::Error;
};

// A denominator vanished at the supplied (q,t): non-generic parameters.
struct DegenerateParameterError : Error {
    using Error::Error;
};

// Evaluation point hit (or came too close to) a pole of a coefficient or
// weight function.
struct PoleError : Error {
    using Error::Error;
};

inline Rational parse_rational(const std::string& text) {
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInputError("cannot parse rational '" + text + "' (expect \"p\" or \"p/q\")");
    }
}

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

template <class F>
F field_cast(const Rational& x) {
    if constexpr (std::is_same_v<F, Rational>) {
        return x;
    } else if constexpr (std::is_same_v<F, Complex>) {
        return Complex(x.get_d(), 0.0);
    } else {
        return static_cast<F>(x.get_d());
    }
}

template <class F>
F field_cast(double x) {
    if constexpr (std::is_same_v<F, Rational>) {
        throw Error("cannot promote float scalar to exact rational");
    } else {
        return F(x);
    }
}

template <class F>
bool is_zero(const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
        return sgn(x) == 0;
    } else {
        return x == F(0);
    }
}

// x^e for integer e of either sign; e < 0 requires x != 0.
template <class F>
F pow_int(const F& x, long e) {
    if (e == 0) return F(1);
    if constexpr (std::is_same_v<F, double>) {
        return std::pow(x, static_cast<double>(e));
    } else if constexpr (std::is_same_v<F, Complex>) {
        if (e < 0) return F(1) / pow_int(x, -e);
        F r(1), b = x;
        for (long n = e; n > 0; n >>= 1) {
            if (n & 1) r *= b;
            if (n > 1) b *= b;
        }
        return r;
    } else {
        if (e < 0) {
            if (is_zero(x)) throw DegenerateParameterError("negative power of zero");
            return F(1) / pow_int(x, -e);
        }
        F r(1), b = x;
        for (long n = e; n > 0; n >>= 1) {
            if (n & 1) r *= b;
            if (n > 1) b *= b;
        }
        return r;
    }
}

// Parameters supplied through their square roots a = q^{1/2}, b = t^{1/2} so
// that every half-integer power of q and t stays inside the scalar field.
template <class R>
struct ParamSet {
    R a;  // q^{1/2}
    R b;  // t^{1/2}
    R q;  // a^2
    R t;  // b^2

    ParamSet(const R& a_, const R& b_) : a(a_), b(b_), q(a_ * a_), t(b_ * b_) {
        if (is_zero(a) || is_zero(b))
            throw DegenerateParameterError("parameter square roots must be nonzero");
    }

    static ParamSet from_sqrt(const R& a_, const R& b_) { return ParamSet(a_, b_); }

    // Swapped-parameter set (q,t) -> (t,q).
    ParamSet swapped() const { return ParamSet(b, a); }

    // Inverted-parameter set (q,t) -> (q^{-1},t^{-1}).
    ParamSet inverted() const { return ParamSet(R(1) / a, R(1) / b); }

    // q^{r/2} and t^{r/2}, exact for exact scalars, any integer r.
    R q_half(long r) const { return pow_int(a, r); }
    R t_half(long r) const { return pow_int(b, r); }
    R q_pow(long r) const { return pow_int(q, r); }
    R t_pow(long r) const { return pow_int(t, r); }

    bool in_unit_interval() const {
        double qd = to_double(q), td = to_double(t);
        return qd > 0.0 && qd < 1.0 && td > 0.0 && td < 1.0;
    }

    // max(sqrt(q/t), sqrt(t/q)); the torus radii separation threshold.
    double radius_ratio_bound() const {
        double r = std::abs(to_double(a) / to_double(b));
        return std::max(r, 1.0 / r);
    }
};

inline ParamSet<double> params_from_qt(double q, double t) {
    if (!(q > 0.0) || !(t > 0.0))
        throw InvalidInputError("q and t must be positive");
    return ParamSet<double>(std::sqrt(q), std::sqrt(t));
}

inline ParamSet<Rational> default_exact_params() {
    return ParamSet<Rational>(Rational(7, 10), Rational(1, 2));
}

// Truncated q-Pochhammer product prod_{k=0}^{K-1} (1 - z q^k).
// Relative truncation error is bounded by roughly |z| |q|^K / (1 - |q|).
template <class F, class Q>
F qpochhammer(const F& z, const Q& q, int K) {
    if (K < 1) throw InvalidInputError("Pochhammer truncation depth must be >= 1");
    F result(1);
    F zq = z;
    for (int k = 0; k < K; ++k) {
        result *= F(1) - zq;
        zq *= F(q);
    }
    return result;
}

}  // namespace supermac
