#pragma once

// Exact coefficient rings: the integers, the rationals and prime fields.
//
// Each ring is a small policy object carrying whatever runtime state it needs
// (the modulus for F_p).  Algorithms are templated on the policy and obtain
// constants through it, so a single code path serves all three rings.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cellkernel/error.hpp"

namespace cellkernel {

class IntegerRing {
public:
    using value_type = mpz_class;
    static constexpr bool is_field = false;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long k) const { return k; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    std::string to_string(const value_type& a) const { return a.get_str(); }
    value_type parse(std::string_view s) const;
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const = default;
};

class RationalRing {
public:
    using value_type = mpq_class;
    static constexpr bool is_field = true;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long k) const { return k; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type inverse(const value_type& a) const;
    std::string to_string(const value_type& a) const { return a.get_str(); }
    value_type parse(std::string_view s) const;
    std::string name() const { return "Q"; }
    bool operator==(const RationalRing&) const = default;
};

/// Residue modulo a prime, stored as its canonical representative 0..p-1.
/// The modulus travels with the value so the usual operators work.
class ModInt {
public:
    ModInt() = default;
    ModInt(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    ModInt& operator+=(const ModInt& o) {
        value_ += o.value_;
        if (value_ >= modulus_) value_ -= modulus_;
        return *this;
    }
    ModInt& operator-=(const ModInt& o) {
        value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
        return *this;
    }
    ModInt& operator*=(const ModInt& o) {
        value_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ % modulus_);
        return *this;
    }
    ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }

    friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
    friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
    friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
    friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
    ModInt operator-() const { return ModInt(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

    friend bool operator==(const ModInt& a, const ModInt& b) { return a.value_ == b.value_; }
    friend auto operator<=>(const ModInt& a, const ModInt& b) { return a.value_ <=> b.value_; }

    ModInt inverse() const {
        if (value_ == 0) throw DomainError("division by zero in F_" + std::to_string(modulus_));
        // Fermat: a^(p-2)
        ModInt result(1, modulus_), base = *this;
        for (std::uint64_t e = modulus_ - 2; e; e >>= 1) {
            if (e & 1) result *= base;
            base *= base;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.value_; }

private:
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 2;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

class PrimeField {
public:
    using value_type = ModInt;
    static constexpr bool is_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw DomainError("F_p requires a prime modulus, got " + std::to_string(p));
        if (p >= (std::uint64_t{1} << 62)) throw DomainError("modulus too large");
    }

    std::uint64_t characteristic() const { return p_; }
    value_type zero() const { return {0, p_}; }
    value_type one() const { return {1, p_}; }
    value_type from_int(long k) const {
        long m = k % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        return {static_cast<std::uint64_t>(m), p_};
    }
    value_type from_integer(const mpz_class& k) const {
        mpz_class m = k % mpz_class(std::to_string(p_));
        if (m < 0) m += mpz_class(std::to_string(p_));
        return {std::stoull(m.get_str()), p_};
    }
    bool is_zero(const value_type& a) const { return a.value() == 0; }
    value_type inverse(const value_type& a) const { return a.inverse(); }
    std::string to_string(const value_type& a) const { return std::to_string(a.value()); }
    value_type parse(std::string_view s) const;
    std::string name() const { return "F" + std::to_string(p_); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

inline RationalRing::value_type RationalRing::inverse(const value_type& a) const {
    if (is_zero(a)) throw DomainError("division by zero in Q");
    return 1 / a;
}

inline IntegerRing::value_type IntegerRing::parse(std::string_view s) const {
    mpz_class v;
    if (s.empty() || v.set_str(std::string(s), 10) != 0) throw ParseError("bad integer '" + std::string(s) + "'");
    return v;
}

inline RationalRing::value_type RationalRing::parse(std::string_view s) const {
    mpq_class v;
    if (s.empty() || v.set_str(std::string(s), 10) != 0) throw ParseError("bad rational '" + std::string(s) + "'");
    if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    v.canonicalize();
    return v;
}

inline PrimeField::value_type PrimeField::parse(std::string_view s) const {
    return from_integer(IntegerRing{}.parse(s));
}

/// Runtime choice of ring: Z, Q or F_p.
using RingSpec = std::variant<IntegerRing, RationalRing, PrimeField>;

/// Accepts "Z", "Q", "Fp:P" (and the shorthand "FP", e.g. "F2").
inline RingSpec parse_ring(std::string_view s) {
    if (s == "Z" || s == "ZZ") return IntegerRing{};
    if (s == "Q" || s == "QQ") return RationalRing{};
    std::string_view digits;
    if (s.starts_with("Fp:")) digits = s.substr(3);
    else if (s.starts_with("F")) digits = s.substr(1);
    else throw ParseError("unknown ring '" + std::string(s) + "' (expected Z, Q or Fp:P)");
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 18)
        throw ParseError("bad prime in ring '" + std::string(s) + "'");
    return PrimeField(std::stoull(std::string(digits)));
}

inline std::string ring_name(const RingSpec& ring) {
    return std::visit([](const auto& r) { return r.name(); }, ring);
}

template <class Ring>
concept Field = Ring::is_field;

}  // namespace cellkernel
