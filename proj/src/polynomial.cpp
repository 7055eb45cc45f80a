#include "pfactor/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pfactor {

namespace {

using RatPoly = std::vector<Rational>;

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim(RatPoly& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coefficients().size());
    for (const BigInt& c : p.coefficients()) out.emplace_back(c);
    return out;
}

/// Clears denominators and content with a positive factor, so signs survive.
IntPolynomial primitive_positive_scale(const RatPoly& p) {
    if (p.empty()) return {};
    BigInt lcm_den = 1;
    for (const Rational& c : p) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(c)));
    std::vector<BigInt> ints;
    ints.reserve(p.size());
    BigInt content = 0;
    for (const Rational& c : p) {
        BigInt v = numerator(c) * (lcm_den / denominator(c));
        content = boost::multiprecision::gcd(content, v);
        ints.push_back(std::move(v));
    }
    if (content < 0) content = -content;
    if (content > 1)
        for (BigInt& v : ints) v /= content;
    return IntPolynomial(std::move(ints));
}

IntPolynomial normalize_leading_positive(IntPolynomial p) {
    if (!p.is_zero() && p.leading() < 0) {
        std::vector<BigInt> c = p.coefficients();
        for (BigInt& v : c) v = -v;
        return IntPolynomial(std::move(c));
    }
    return p;
}

/// Remainder of a by b over Q; b non-zero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) return {};
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    // den^deg * p(num/den), den > 0, evaluated by homogeneous Horner.
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    BigInt acc = 0;
    BigInt den_power = 1;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * num + coeffs_[i] * den_power;
        den_power *= den;
    }
    // The loop multiplied coefficient i by den^(deg-i) as required.
    return acc.sign();
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag;
        if (i >= 1) out << 'x';
        if (i >= 2) out << '^' << i;
        first = false;
    }
    return out.str();
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly_exact requires a square matrix");
    if (n == 0) return IntPolynomial({BigInt(1)});

    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<std::vector<BigInt>> current(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) current[i][i] = 1;

    std::vector<std::vector<BigInt>> product(n, std::vector<BigInt>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& out = product[i];
            for (BigInt& v : out) v = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const long long a = m[i][j];
                if (a == 0) continue;
                const auto& src = current[j];
                if (a == 1) {
                    for (std::size_t c = 0; c < n; ++c) out[c] += src[c];
                } else {
                    for (std::size_t c = 0; c < n; ++c) out[c] += src[c] * a;
                }
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += product[i][i];
        const BigInt ck = -trace / static_cast<unsigned>(k);
        coeffs[n - k] = ck;
        std::swap(current, product);
        for (std::size_t i = 0; i < n; ++i) current[i][i] += ck;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_exact(const Graph& g) {
    const std::size_t n = g.order();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : g.neighbors(u)) m[u][v] = 1;
    return char_poly_exact(m);
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    RatPoly a = to_rational(p);
    RatPoly b = to_rational(q);
    while (!b.empty()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
        // Keep coefficient growth in check.
        if (!b.empty()) b = to_rational(primitive_positive_scale(b));
    }
    return normalize_leading_positive(primitive_positive_scale(a));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.degree() <= 0) return normalize_leading_positive(primitive_positive_scale(to_rational(p)));
    const IntPolynomial g = poly_gcd(p, p.derivative());
    return normalize_leading_positive(primitive_positive_scale(quotient(to_rational(p), to_rational(g))));
}

SturmChain::SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_.front().degree() >= 1) {
        chain_.push_back(chain_.front().derivative());
        while (true) {
            RatPoly r = remainder(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
            if (r.empty()) break;
            for (Rational& c : r) c = -c;
            chain_.push_back(primitive_positive_scale(r));
        }
    }
    // Signs at +inf and -inf follow the leading coefficients and degree parities.
    int prev_pos = 0;
    int prev_neg = 0;
    std::size_t changes_neg = 0;
    for (const IntPolynomial& q : chain_) {
        const int pos = q.leading().sign();
        const int neg = q.degree() % 2 == 0 ? pos : -pos;
        if (prev_pos != 0 && pos != prev_pos) ++changes_at_infinity_;
        if (prev_neg != 0 && neg != prev_neg) ++changes_neg;
        prev_pos = pos;
        prev_neg = neg;
    }
    total_ = changes_neg - changes_at_infinity_;
}

std::size_t SturmChain::sign_changes(const Rational& x) const {
    std::size_t changes = 0;
    int prev = 0;
    for (const IntPolynomial& q : chain_) {
        const int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::size_t SturmChain::count_above(const Rational& x) const { return sign_changes(x) - changes_at_infinity_; }

LargestRootBracket::LargestRootBracket(const IntPolynomial& p, Rational lo, Rational hi)
    : chain_(p), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (chain_.count_above(hi_) != 0) throw std::invalid_argument("bracket upper end lies below a root");
    if (chain_.count_above(lo_) == 0) throw std::invalid_argument("bracket holds no root");
}

void LargestRootBracket::bisect() {
    Rational mid = (lo_ + hi_) / 2;
    if (chain_.count_above(mid) >= 1)
        lo_ = std::move(mid);
    else
        hi_ = std::move(mid);
}

}  // namespace pfactor
