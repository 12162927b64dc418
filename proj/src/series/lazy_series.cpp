#include "dval/series/lazy_series.hpp"

#include <algorithm>
#include <mutex>

#include "dval/error.hpp"

namespace dval {
namespace detail {

class SeriesNode {
public:
    explicit SeriesNode(long lower_bound) : lower_bound_(std::max(0L, lower_bound)) {}
    virtual ~SeriesNode() = default;
    SeriesNode(const SeriesNode&) = delete;
    SeriesNode& operator=(const SeriesNode&) = delete;

    long lower_bound() const noexcept { return lower_bound_; }
    virtual bool syntactic_zero() const = 0;

    // Fills the memo in ascending order so a node may read its own earlier
    // coefficients while computing the next one. The lock is never held
    // across compute(); a racing thread produces the identical value.
    FieldElem coefficient(long e) const
    {
        if (e < lower_bound_) return FieldElem{};
        std::size_t want = static_cast<std::size_t>(e - lower_bound_);
        std::size_t next;
        {
            std::lock_guard lock(mutex_);
            if (want < memo_.size()) return memo_[want];
            next = memo_.size();
        }
        for (std::size_t k = next; k <= want; ++k) {
            FieldElem c = compute(lower_bound_ + static_cast<long>(k));
            std::lock_guard lock(mutex_);
            if (memo_.size() == k) memo_.push_back(std::move(c));
        }
        std::lock_guard lock(mutex_);
        return memo_[want];
    }

protected:
    virtual FieldElem compute(long e) const = 0;

private:
    long lower_bound_;
    mutable std::mutex mutex_;
    mutable std::vector<FieldElem> memo_;
};

namespace {

long leaf_lower_bound(const std::map<long, FieldElem>& terms, const std::vector<Tail>& tails)
{
    long lb = -1;
    auto consider = [&](long e) { lb = lb < 0 ? e : std::min(lb, e); };
    if (!terms.empty()) consider(terms.begin()->first);
    for (const auto& t : tails) consider(t.slope * t.coeff.from() + t.offset);
    return std::max(0L, lb);
}

class LeafNode final : public SeriesNode {
public:
    LeafNode(std::map<long, FieldElem> terms, std::vector<Tail> tails)
        : SeriesNode(leaf_lower_bound(terms, tails)), terms_(std::move(terms)), tails_(std::move(tails))
    {
    }
    bool syntactic_zero() const override { return terms_.empty() && tails_.empty(); }

protected:
    FieldElem compute(long e) const override
    {
        FieldElem c;
        if (auto it = terms_.find(e); it != terms_.end()) c = it->second;
        for (const auto& t : tails_) {
            long d = e - t.offset;
            if (d % t.slope != 0) continue;
            long j = d / t.slope;
            if (j < t.coeff.from()) continue;
            c += t.coeff.evaluate(j);
        }
        return c;
    }

private:
    std::map<long, FieldElem> terms_;
    std::vector<Tail> tails_;
};

using NodePtr = std::shared_ptr<const SeriesNode>;

class SumNode final : public SeriesNode {
public:
    SumNode(NodePtr a, NodePtr b, bool subtract)
        : SeriesNode(std::min(a->lower_bound(), b->lower_bound())), a_(std::move(a)), b_(std::move(b)),
          subtract_(subtract)
    {
    }
    bool syntactic_zero() const override { return a_->syntactic_zero() && b_->syntactic_zero(); }

protected:
    FieldElem compute(long e) const override
    {
        return subtract_ ? a_->coefficient(e) - b_->coefficient(e) : a_->coefficient(e) + b_->coefficient(e);
    }

private:
    NodePtr a_, b_;
    bool subtract_;
};

class ProductNode final : public SeriesNode {
public:
    ProductNode(NodePtr a, NodePtr b)
        : SeriesNode(a->lower_bound() + b->lower_bound()), a_(std::move(a)), b_(std::move(b))
    {
    }
    bool syntactic_zero() const override { return a_->syntactic_zero() || b_->syntactic_zero(); }

protected:
    FieldElem compute(long e) const override
    {
        FieldElem c;
        const long la = a_->lower_bound();
        const long lb = b_->lower_bound();
        for (long i = la; i <= e - lb; ++i) {
            FieldElem x = a_->coefficient(i);
            if (x.is_zero()) continue;
            FieldElem y = b_->coefficient(e - i);
            if (y.is_zero()) continue;
            c += x * y;
        }
        return c;
    }

private:
    NodePtr a_, b_;
};

class ScaleNode final : public SeriesNode {
public:
    ScaleNode(NodePtr a, FieldElem c) : SeriesNode(a->lower_bound()), a_(std::move(a)), c_(std::move(c)) {}
    bool syntactic_zero() const override { return c_.is_zero() || a_->syntactic_zero(); }

protected:
    FieldElem compute(long e) const override { return c_ * a_->coefficient(e); }

private:
    NodePtr a_;
    FieldElem c_;
};

class ShiftNode final : public SeriesNode {
public:
    ShiftNode(NodePtr a, long k) : SeriesNode(a->lower_bound() - k), a_(std::move(a)), k_(k) {}
    bool syntactic_zero() const override { return a_->syntactic_zero(); }

protected:
    FieldElem compute(long e) const override { return a_->coefficient(e + k_); }

private:
    NodePtr a_;
    long k_;
};

// q = a / b where ord(b) = beta with b_beta != 0 and ord(a) >= beta:
//   q_k = (a_{k+beta} - sum_{i>=1} b_{beta+i} q_{k-i}) / b_beta
class QuotientNode final : public SeriesNode {
public:
    QuotientNode(NodePtr a, NodePtr b, long alpha, long beta, FieldElem lead)
        : SeriesNode(alpha - beta), a_(std::move(a)), b_(std::move(b)), beta_(beta), inv_lead_(lead.inverse()),
          zero_(a_->syntactic_zero())
    {
    }
    bool syntactic_zero() const override { return zero_; }

protected:
    FieldElem compute(long k) const override
    {
        FieldElem c = a_->coefficient(k + beta_);
        const long lb = lower_bound();
        for (long i = 1; k - i >= lb; ++i) {
            FieldElem bi = b_->coefficient(beta_ + i);
            if (bi.is_zero()) continue;
            FieldElem q = coefficient(k - i);
            if (q.is_zero()) continue;
            c -= bi * q;
        }
        return c * inv_lead_;
    }

private:
    NodePtr a_, b_;
    long beta_;
    FieldElem inv_lead_;
    bool zero_;
};

} // namespace
} // namespace detail

using detail::LeafNode;

LazySeries::LazySeries() : node_(std::make_shared<LeafNode>(std::map<long, FieldElem>{}, std::vector<Tail>{})) {}

LazySeries LazySeries::from_parts(std::map<long, FieldElem> terms, std::vector<Tail> tails)
{
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first < 0) throw DomainError("negative exponent in series term");
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    for (const auto& t : tails) {
        if (t.slope < 1) throw DomainError("tail exponent rule needs slope >= 1");
        if (t.slope * t.coeff.from() + t.offset < 0) throw DomainError("tail starts at a negative exponent");
    }
    return LazySeries(std::make_shared<LeafNode>(std::move(terms), std::move(tails)));
}

LazySeries LazySeries::constant(FieldElem c)
{
    return monomial(std::move(c), 0);
}

LazySeries LazySeries::monomial(FieldElem c, long exponent)
{
    std::map<long, FieldElem> terms;
    terms.emplace(exponent, std::move(c));
    return from_parts(std::move(terms));
}

FieldElem LazySeries::coefficient(long e) const
{
    if (e < 0) return FieldElem{};
    return node_->coefficient(e);
}

Value LazySeries::order(long cap) const
{
    if (node_->syntactic_zero()) return Value::infinite();
    for (long e = node_->lower_bound(); e <= cap; ++e)
        if (!node_->coefficient(e).is_zero()) return Value::finite(e);
    return Value::exhausted(cap);
}

long LazySeries::known_order_lower_bound() const
{
    return node_->lower_bound();
}

bool LazySeries::is_syntactic_zero() const
{
    return node_->syntactic_zero();
}

LazySeries LazySeries::scaled(const FieldElem& c) const
{
    return LazySeries(std::make_shared<detail::ScaleNode>(node_, c));
}

LazySeries LazySeries::shifted_down(long k) const
{
    if (k < 0 || k > node_->lower_bound()) throw DomainError("shift would leave the power series ring");
    if (k == 0) return *this;
    return LazySeries(std::make_shared<detail::ShiftNode>(node_, k));
}

LazySeries operator+(const LazySeries& a, const LazySeries& b)
{
    return LazySeries(std::make_shared<detail::SumNode>(a.node_, b.node_, false));
}

LazySeries operator-(const LazySeries& a, const LazySeries& b)
{
    return LazySeries(std::make_shared<detail::SumNode>(a.node_, b.node_, true));
}

LazySeries operator*(const LazySeries& a, const LazySeries& b)
{
    return LazySeries(std::make_shared<detail::ProductNode>(a.node_, b.node_));
}

LazySeries divide(const LazySeries& a, const LazySeries& b, long cap)
{
    Value vb = b.order(cap);
    if (!vb.is_finite()) throw PrecisionError("divisor order not established within precision " + std::to_string(cap), cap);
    if (a.is_syntactic_zero()) return LazySeries{};
    Value va = a.order(cap);
    if (!va.is_finite())
        throw PrecisionError("dividend order not established within precision " + std::to_string(cap), cap);
    if (va.get() < vb.get()) throw DomainError("quotient would leave the power series ring");
    FieldElem lead = b.coefficient(vb.get());
    return LazySeries(std::make_shared<detail::QuotientNode>(a.node_, b.node_, va.get(), vb.get(), lead));
}

LazySeries integer_power(const LazySeries& a, long m)
{
    if (m < 1) throw DomainError("integer_power needs m >= 1");
    if (m == 1) return a;
    LazySeries half = integer_power(a, m / 2);
    LazySeries sq = half * half;
    return (m % 2) ? sq * a : sq;
}

FieldElem leading_coefficient(const LazySeries& s, long cap)
{
    Value v = s.order(cap);
    if (!v.is_finite()) throw PrecisionError("order not established within precision " + std::to_string(cap), cap);
    return s.coefficient(v.get());
}

} // namespace dval
