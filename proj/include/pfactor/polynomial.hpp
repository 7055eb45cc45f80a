#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pfactor/graph.hpp"

namespace pfactor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer polynomial, coefficients in ascending degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero past the degree.
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt evaluate(const BigInt& x) const;
    /// Sign (-1, 0, 1) of p(x), computed exactly.
    int sign_at(const Rational& x) const;
    IntPolynomial derivative() const;

    /// Human-readable form, e.g. "x^3 - 3x - 2".
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Square integer matrix, row-major rows.
using IntMatrix = std::vector<std::vector<long long>>;

/// det(xI - M) by the Faddeev-LeVerrier recurrence; every division is exact.
IntPolynomial char_poly_exact(const IntMatrix& m);
IntPolynomial char_poly_exact(const Graph& g);

/// Greatest common divisor over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sturm chain of the square-free part of p; counts distinct real roots.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);

    /// Number of distinct real roots strictly greater than x.
    std::size_t count_above(const Rational& x) const;
    /// Number of distinct real roots in (lo, hi].
    std::size_t count_in(const Rational& lo, const Rational& hi) const {
        return count_above(lo) - count_above(hi);
    }
    std::size_t root_count() const { return total_; }
    const IntPolynomial& base() const { return chain_.front(); }

private:
    std::size_t sign_changes(const Rational& x) const;

    std::vector<IntPolynomial> chain_;
    std::size_t changes_at_infinity_ = 0;
    std::size_t total_ = 0;
};

/// Half-open interval (lo, hi] that brackets the largest real root of a
/// polynomial and is refined by bisection.
class LargestRootBracket {
public:
    /// Requires every real root of p to lie in (lo, hi] and at least one to exist.
    LargestRootBracket(const IntPolynomial& p, Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    /// True once the bracket holds no other root of p.
    bool isolated() const { return chain_.count_above(lo_) == 1; }
    void bisect();
    const SturmChain& chain() const { return chain_; }

private:
    SturmChain chain_;
    Rational lo_;
    Rational hi_;
};

}  // namespace pfactor
