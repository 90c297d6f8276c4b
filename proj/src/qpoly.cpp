#include "lrrc/qpoly.hpp"

#include <algorithm>

#include "lrrc/errors.hpp"

namespace lrrc {

QPoly::QPoly(std::vector<std::int64_t> coef) : coef_(std::move(coef)) { trim(); }

QPoly QPoly::constant(std::int64_t c) { return QPoly({c}); }

QPoly QPoly::monomial(int degree, std::int64_t c)
{
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return QPoly(std::move(v));
}

std::int64_t QPoly::operator[](int i) const
{
    if (i < 0 || i >= static_cast<int>(coef_.size()))
        return 0;
    return coef_[i];
}

void QPoly::trim()
{
    while (!coef_.empty() && coef_.back() == 0)
        coef_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.coef_.size() > coef_.size())
        coef_.resize(o.coef_.size(), 0);
    for (std::size_t i = 0; i < o.coef_.size(); ++i)
        coef_[i] += o.coef_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.coef_.size() > coef_.size())
        coef_.resize(o.coef_.size(), 0);
    for (std::size_t i = 0; i < o.coef_.size(); ++i)
        coef_[i] -= o.coef_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<std::int64_t> v(a.coef_.size() + b.coef_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j)
            v[i + j] += a.coef_[i] * b.coef_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::divided_by(const QPoly& d) const
{
    if (d.is_zero())
        throw internal_error("division by the zero polynomial");
    std::vector<std::int64_t> rem = coef_;
    if (rem.size() < d.coef_.size())
        rem.resize(d.coef_.size(), 0);
    std::size_t qn = rem.size() - d.coef_.size() + 1;
    std::vector<std::int64_t> quo(qn, 0);
    std::int64_t lead = d.coef_.back();
    for (std::size_t i = qn; i-- > 0;) {
        std::int64_t top = rem[i + d.coef_.size() - 1];
        if (top % lead != 0)
            throw internal_error("inexact polynomial division");
        std::int64_t c = top / lead;
        quo[i] = c;
        for (std::size_t j = 0; j < d.coef_.size(); ++j)
            rem[i + j] -= c * d.coef_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; }))
        throw internal_error("inexact polynomial division");
    return QPoly(std::move(quo));
}

std::int64_t QPoly::eval(std::int64_t q) const
{
    std::int64_t v = 0;
    for (std::size_t i = coef_.size(); i-- > 0;)
        v = v * q + coef_[i];
    return v;
}

QPoly QPoly::reversed(int n) const
{
    if (is_zero())
        return {};
    if (n < degree())
        throw internal_error("reversal degree below polynomial degree");
    std::vector<std::int64_t> v(n + 1, 0);
    for (std::size_t i = 0; i < coef_.size(); ++i)
        v[n - i] = coef_[i];
    return QPoly(std::move(v));
}

bool QPoly::coefficientwise_le(const QPoly& o) const
{
    int n = std::max(degree(), o.degree());
    for (int i = 0; i <= n; ++i)
        if ((*this)[i] > o[i])
            return false;
    return true;
}

bool QPoly::nonnegative() const
{
    return std::all_of(coef_.begin(), coef_.end(), [](std::int64_t x) { return x >= 0; });
}

std::string QPoly::str() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        std::int64_t c = coef_[i];
        if (c == 0)
            continue;
        std::int64_t a = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (i == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1)
            s += std::to_string(a);
        s += "q";
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s;
}

QPoly gaussian_binomial(int m, int n)
{
    if (m < 0 || n < 0)
        return {};
    // (q)_{m+n} / ((q)_m (q)_n), built as a running product of exact quotients.
    QPoly r = QPoly::constant(1);
    int k = std::min(m, n);
    for (int i = 1; i <= k; ++i) {
        QPoly num = QPoly::constant(1) - QPoly::monomial(m + n - k + i);
        QPoly den = QPoly::constant(1) - QPoly::monomial(i);
        r = (r * num).divided_by(den);
    }
    return r;
}

} // namespace lrrc
