#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lrrc {

// Polynomial in q with exact integer coefficients; coef[i] multiplies q^i.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<std::int64_t> coef);

    static QPoly constant(std::int64_t c);
    static QPoly monomial(int degree, std::int64_t c = 1);

    const std::vector<std::int64_t>& coefficients() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    std::int64_t operator[](int i) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    // Exact division; throws if the remainder is nonzero.
    QPoly divided_by(const QPoly& d) const;

    std::int64_t eval(std::int64_t q) const;
    // Coefficients of q^n * p(1/q); requires n >= degree.
    QPoly reversed(int n) const;
    // Every coefficient of *this is <= the matching one of o.
    bool coefficientwise_le(const QPoly& o) const;
    bool nonnegative() const;

    std::string str() const;

    bool operator==(const QPoly&) const = default;

private:
    void trim();
    std::vector<std::int64_t> coef_;
};

// Gaussian binomial [m+n choose m]_q; zero if m < 0 or n < 0.
QPoly gaussian_binomial(int m, int n);

} // namespace lrrc
