#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charmod/exactmath/errors.hpp"
#include "charmod/exactmath/rat.hpp"
#include "charmod/exactmath/ring_traits.hpp"

namespace charmod {

// Truncated series in q on the exponent grid (1/24)Z_{>=0}.
// A term with key k stands for coeff * q^{k/24}; keys never exceed 24 * order.
template <class R>
class QExpSeries {
public:
    using Traits = RingTraits<R>;
    static constexpr int kGrid = 24;

    QExpSeries(int order, R ring_zero) : order_(order), zero_(Traits::zero_like(ring_zero))
    {
        if (order < 0)
            throw ArgumentError("negative q-order");
    }

    static QExpSeries constant(const R& c, int order)
    {
        QExpSeries s(order, c);
        s.add_term(0, c);
        return s;
    }

    static QExpSeries term(const R& c, int numerator, int order)
    {
        QExpSeries s(order, c);
        s.add_term(numerator, c);
        return s;
    }

    int order() const { return order_; }
    int max_numerator() const { return kGrid * order_; }
    const R& ring_zero() const { return zero_; }
    R ring_one() const { return Traits::one_like(zero_); }
    const std::map<int, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coefficient(int numerator) const
    {
        auto it = terms_.find(numerator);
        return it == terms_.end() ? zero_ : it->second;
    }
    // Coefficient of q^n for integral n.
    R at(int n) const { return coefficient(kGrid * n); }

    bool integral_exponents() const
    {
        for (const auto& [k, c] : terms_)
            if (k % kGrid != 0)
                return false;
        return true;
    }

    // Adds c * q^{numerator/24}; terms beyond the truncation are dropped.
    void add_term(int numerator, const R& c)
    {
        if (numerator < 0)
            throw GridError("negative exponent numerator");
        if (numerator > max_numerator() || Traits::is_zero(c))
            return;
        require_compatible(c);
        auto it = terms_.find(numerator);
        if (it == terms_.end()) {
            terms_.emplace(numerator, c);
            return;
        }
        it->second = it->second + c;
        if (Traits::is_zero(it->second))
            terms_.erase(it);
    }

    QExpSeries truncated(int order) const
    {
        QExpSeries r(std::min(order, order_), zero_);
        for (const auto& [k, c] : terms_)
            r.add_term(k, c);
        return r;
    }

    template <class F>
    auto map(F f) const -> QExpSeries<decltype(f(std::declval<const R&>()))>
    {
        using S = decltype(f(std::declval<const R&>()));
        QExpSeries<S> r(order_, f(zero_));
        for (const auto& [k, c] : terms_)
            r.add_term(k, f(c));
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << Traits::to_string(c) << ")";
            if (k != 0)
                os << "*q^" << exponent_string(k);
        }
        os << " + O(q^" << order_ + 1 << ")";
        return os.str();
    }

    static std::string exponent_string(int numerator)
    {
        if (numerator % kGrid == 0)
            return std::to_string(numerator / kGrid);
        return "(" + Rat(numerator, kGrid).to_string() + ")";
    }

    void require_compatible(const R& c) const
    {
        if (!Traits::compatible(zero_, c))
            throw RingMismatch("coefficient ring " + Traits::ring_name(c) + " vs " + Traits::ring_name(zero_));
    }

    void require_compatible(const QExpSeries& o) const { require_compatible(o.zero_); }

    QExpSeries& operator+=(const QExpSeries& o)
    {
        require_compatible(o);
        if (o.order_ < order_)
            *this = truncated(o.order_);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }

    QExpSeries operator-() const
    {
        QExpSeries r(order_, zero_);
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, zero_ - c);
        return r;
    }

    QExpSeries& operator-=(const QExpSeries& o) { return *this += -o; }

    friend QExpSeries operator+(QExpSeries a, const QExpSeries& b) { return a += b; }
    friend QExpSeries operator-(QExpSeries a, const QExpSeries& b) { return a -= b; }

    // Coefficientwise product with a ring element.
    QExpSeries scaled(const R& s) const
    {
        require_compatible(s);
        QExpSeries r(order_, zero_);
        for (const auto& [k, c] : terms_)
            r.add_term(k, c * s);
        return r;
    }

    friend bool operator==(const QExpSeries& a, const QExpSeries& b)
    {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    int order_;
    R zero_;
    std::map<int, R> terms_;
};

template <class R>
QExpSeries<R> qs_mul(const QExpSeries<R>& a, const QExpSeries<R>& b)
{
    a.require_compatible(b);
    QExpSeries<R> r(std::min(a.order(), b.order()), a.ring_zero());
    const int limit = r.max_numerator();
    for (const auto& [i, ca] : a.terms()) {
        if (i > limit)
            break;
        for (const auto& [j, cb] : b.terms()) {
            if (i + j > limit)
                break;
            r.add_term(i + j, ca * cb);
        }
    }
    return r;
}

template <class R>
QExpSeries<R> operator*(const QExpSeries<R>& a, const QExpSeries<R>& b)
{
    return qs_mul(a, b);
}

template <class R>
QExpSeries<R> qs_inv(const QExpSeries<R>& a)
{
    using Traits = RingTraits<R>;
    if (a.terms().empty())
        throw NotInvertible("inverse of the zero series");
    const int lead = a.terms().begin()->first;
    if (lead != 0) {
        if (lead % QExpSeries<R>::kGrid != 0)
            throw GridError("leading exponent " + QExpSeries<R>::exponent_string(lead) + " is fractional");
        throw NotInvertible("constant term absent");
    }
    const R& a0 = a.terms().begin()->second;
    if (!Traits::is_unit(a0))
        throw NotInvertible("constant term " + Traits::to_string(a0) + " is not a unit");
    const R inv0 = Traits::inverse(a0);
    const int limit = a.max_numerator();
    std::vector<std::optional<R>> b(static_cast<std::size_t>(limit) + 1);
    b[0] = inv0;
    for (int k = 1; k <= limit; ++k) {
        std::optional<R> s;
        for (const auto& [j, aj] : a.terms()) {
            if (j == 0)
                continue;
            if (j > k)
                break;
            if (b[k - j]) {
                R t = aj * *b[k - j];
                s = s ? *s + t : t;
            }
        }
        if (s && !Traits::is_zero(*s))
            b[k] = a.ring_zero() - *s * inv0;
    }
    QExpSeries<R> r(a.order(), a.ring_zero());
    for (int k = 0; k <= limit; ++k)
        if (b[k])
            r.add_term(k, *b[k]);
    return r;
}

template <class R>
QExpSeries<R> qs_pow(const QExpSeries<R>& a, int n)
{
    if (n < 0)
        return qs_pow(qs_inv(a), -n);
    QExpSeries<R> result = QExpSeries<R>::constant(a.ring_one(), a.order());
    QExpSeries<R> base = a;
    while (n > 0) {
        if (n & 1)
            result = qs_mul(result, base);
        n >>= 1;
        if (n > 0)
            base = qs_mul(base, base);
    }
    return result;
}

namespace detail {

// exp of a series with zero constant term via k b_k = sum_j j a_j b_{k-j}.
template <class R>
QExpSeries<R> exp_positive(const QExpSeries<R>& a)
{
    using Traits = RingTraits<R>;
    const int limit = a.max_numerator();
    std::vector<std::optional<R>> b(static_cast<std::size_t>(limit) + 1);
    b[0] = a.ring_one();
    for (int k = 1; k <= limit; ++k) {
        std::optional<R> s;
        for (const auto& [j, aj] : a.terms()) {
            if (j == 0)
                continue;
            if (j > k)
                break;
            if (b[k - j]) {
                R t = Traits::scale(aj * *b[k - j], Rat(j));
                s = s ? *s + t : t;
            }
        }
        if (s && !Traits::is_zero(*s))
            b[k] = Traits::scale(*s, Rat(1, k));
    }
    QExpSeries<R> r(a.order(), a.ring_zero());
    for (int k = 0; k <= limit; ++k)
        if (b[k])
            r.add_term(k, *b[k]);
    return r;
}

} // namespace detail

template <class R>
QExpSeries<R> qs_exp(const QExpSeries<R>& a)
{
    using Traits = RingTraits<R>;
    static_assert(Traits::q_algebra, "exp needs a Q-algebra");
    const R a0 = a.coefficient(0);
    const R e0 = Traits::exp_constant(a0);
    QExpSeries<R> rest = a;
    rest.add_term(0, a.ring_zero() - a0);
    return detail::exp_positive(rest).scaled(e0);
}

template <class R>
QExpSeries<R> qs_log(const QExpSeries<R>& a)
{
    using Traits = RingTraits<R>;
    static_assert(Traits::q_algebra, "log needs a Q-algebra");
    const R a0 = a.coefficient(0);
    if (Traits::is_zero(a0))
        throw NotExponentiable("log of a series without constant term");
    const R l0 = Traits::log_constant(a0);
    const QExpSeries<R> u = a.scaled(Traits::inverse(a0));
    const int limit = a.max_numerator();
    std::vector<std::optional<R>> b(static_cast<std::size_t>(limit) + 1);
    for (int k = 1; k <= limit; ++k) {
        std::optional<R> s;
        auto uk = u.terms().find(k);
        if (uk != u.terms().end())
            s = Traits::scale(uk->second, Rat(k));
        for (const auto& [j, uj] : u.terms()) {
            if (j == 0)
                continue;
            if (j >= k)
                break;
            if (b[k - j]) {
                R t = Traits::scale(*b[k - j] * uj, Rat(-(k - j)));
                s = s ? *s + t : t;
            }
        }
        if (s && !Traits::is_zero(*s))
            b[k] = Traits::scale(*s, Rat(1, k));
    }
    QExpSeries<R> r(a.order(), a.ring_zero());
    r.add_term(0, l0);
    for (int k = 1; k <= limit; ++k)
        if (b[k])
            r.add_term(k, *b[k]);
    return r;
}

// Lifts a rational series into ring R by multiplying every coefficient into `unit`.
template <class R>
QExpSeries<R> lift(const QExpSeries<Rat>& s, const R& unit)
{
    QExpSeries<R> r(s.order(), RingTraits<R>::zero_like(unit));
    for (const auto& [k, c] : s.terms())
        r.add_term(k, RingTraits<R>::scale(unit, c));
    return r;
}

} // namespace charmod
