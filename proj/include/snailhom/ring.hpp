#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace snailhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base rings: the integers, the rationals, or a prime field.
/// All scalars are stored as exact rationals; the ring controls
/// normalization (F_p: canonical residue in [0,p), Z: denominator 1).
class Ring {
public:
    enum class Tag { Integers, Rationals, PrimeField };

    static Ring integers() { return Ring(Tag::Integers, 0); }
    static Ring rationals() { return Ring(Tag::Rationals, 0); }
    static Ring prime_field(std::int64_t p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
        return Ring(Tag::PrimeField, p);
    }

    Tag tag() const { return tag_; }
    std::int64_t characteristic() const { return p_; }
    bool is_field() const { return tag_ != Tag::Integers; }

    bool operator==(const Ring& o) const { return tag_ == o.tag_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// Canonical form of a scalar in this ring.
    Rat normalize(const Rat& v) const
    {
        switch (tag_) {
        case Tag::Rationals:
            return v; // cpp_rational is already in lowest terms
        case Tag::Integers:
            if (boost::multiprecision::denominator(v) != 1)
                throw std::invalid_argument("integer ring: non-integral scalar");
            return v;
        case Tag::PrimeField: {
            Int num = boost::multiprecision::numerator(v);
            Int den = boost::multiprecision::denominator(v);
            Int p(p_);
            Int n = num % p;
            if (n < 0) n += p;
            if (den != 1) {
                Int d = den % p;
                if (d < 0) d += p;
                if (d == 0)
                    throw std::invalid_argument("prime field: denominator divisible by p");
                n = (n * inverse_mod(d, p)) % p;
            }
            return Rat(n);
        }
        }
        throw std::logic_error("unreachable");
    }

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }

    bool is_zero(const Rat& a) const { return normalize(a) == 0; }

    /// Units: Z -> +-1, fields -> any nonzero element.
    bool is_unit(const Rat& a) const
    {
        Rat v = normalize(a);
        if (tag_ == Tag::Integers) return v == 1 || v == -1;
        return v != 0;
    }

    /// Exact division; fails when b does not divide a (only possible over Z).
    bool divides(const Rat& a, const Rat& b) const // a | b
    {
        Rat av = normalize(a);
        if (av == 0) return is_zero(b);
        if (tag_ != Tag::Integers) return true;
        return boost::multiprecision::numerator(normalize(b)) % boost::multiprecision::numerator(av) == 0;
    }

    Rat div(const Rat& a, const Rat& b) const // a / b, exact
    {
        Rat bv = normalize(b);
        if (bv == 0) throw std::invalid_argument("division by zero");
        if (tag_ == Tag::Integers && !divides(bv, a))
            throw std::invalid_argument("inexact division over Z");
        return normalize(Rat(a) / bv);
    }

    /// Euclidean division a = q*b + r with r as small as possible
    /// (round-to-nearest over Z; exact over fields).
    Rat euclid_quot(const Rat& a, const Rat& b) const
    {
        Rat bv = normalize(b);
        if (bv == 0) throw std::invalid_argument("euclid_quot: zero divisor");
        if (tag_ != Tag::Integers) return div(a, bv);
        Int an = boost::multiprecision::numerator(normalize(a));
        Int bn = boost::multiprecision::numerator(bv);
        // round to nearest so remainders shrink fast; truncated quotient
        // is within one step of it
        Int q = an / bn;
        Int r = an - q * bn;
        Int ab = bn < 0 ? Int(-bn) : bn;
        while (2 * r > ab) { q += bn > 0 ? 1 : -1; r = an - q * bn; }
        while (2 * r < -ab) { q -= bn > 0 ? 1 : -1; r = an - q * bn; }
        return Rat(q);
    }

    /// Euclidean size used for pivot selection; 0 only for the zero scalar.
    Int euclid_size(const Rat& a) const
    {
        Rat v = normalize(a);
        if (v == 0) return 0;
        if (tag_ != Tag::Integers) return 1;
        Int n = boost::multiprecision::numerator(v);
        return n < 0 ? Int(-n) : n;
    }

    std::string to_string(const Rat& v) const
    {
        Rat n = normalize(v);
        std::ostringstream os;
        os << n;
        return os.str();
    }

    std::string name() const
    {
        switch (tag_) {
        case Tag::Integers: return "Z";
        case Tag::Rationals: return "Q";
        case Tag::PrimeField: return "F" + std::to_string(p_);
        }
        return "?";
    }

    static bool is_prime(std::int64_t p)
    {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    Ring(Tag t, std::int64_t p) : tag_(t), p_(p) {}

    static Int inverse_mod(Int a, const Int& p)
    {
        // extended Euclid
        Int t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            Int q = r / newr;
            Int tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (r != 1) throw std::invalid_argument("not invertible mod p");
        if (t < 0) t += p;
        return t;
    }

    Tag tag_;
    std::int64_t p_;
};

} // namespace snailhom
