#pragma once

#include <cstdint>
#include <string>

namespace dval {

// Result of an order computation: a finite integer, +infinity for a
// syntactically zero element, or exhaustion of the precision cap.
class Value {
public:
    enum class Kind { Finite, Infinite, PrecisionExhausted };

    static Value finite(std::int64_t v) { return Value(Kind::Finite, v); }
    static Value infinite() { return Value(Kind::Infinite, 0); }
    static Value exhausted(std::int64_t cap) { return Value(Kind::PrecisionExhausted, cap); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
    bool is_exhausted() const noexcept { return kind_ == Kind::PrecisionExhausted; }
    // Finite value, or the cap for an exhausted search.
    std::int64_t get() const noexcept { return number_; }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::Finite: return std::to_string(number_);
        case Kind::Infinite: return "infinite";
        default: return "precision exhausted at " + std::to_string(number_);
        }
    }

    friend bool operator==(const Value&, const Value&) = default;

private:
    Value(Kind k, std::int64_t n) : kind_(k), number_(n) {}
    Kind kind_;
    std::int64_t number_;
};

} // namespace dval
