#pragma once

#include <cstdint>
#include <string>

#include "tautilt/rational.hpp"

namespace tautilt {

// Field contexts. All linear algebra and module code is generic over a small
// context object rather than a self-contained element type, so that a prime
// field with runtime-chosen p can use a plain uint32_t element.

struct RationalField {
    using Elem = Rational;
    static constexpr bool prime = false;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Rational(1) / a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem from_int(long long v) const { return Rational(v); }
    Elem from_rational(const Rational& r) const { return r; }

    std::string name() const { return "rational"; }
    bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
    using Elem = uint32_t;
    static constexpr bool prime = true;

    uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(uint32_t prime_) : p(prime_) {
        if (p < 2 || !is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return static_cast<uint64_t>(a) * b % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero in F_p");
        // Fermat: a^(p-2)
        uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<Elem>(r);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    Elem from_rational(const Rational& r) const {
        Elem d = from_int(r.den());
        if (d == 0)
            throw DomainError("denominator divisible by p=" + std::to_string(p) +
                              " in coefficient " + r.str());
        return mul(from_int(r.num()), inv(d));
    }

    std::string name() const { return "fp(" + std::to_string(p) + ")"; }
    bool operator==(const PrimeField& o) const { return p == o.p; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

}  // namespace tautilt
