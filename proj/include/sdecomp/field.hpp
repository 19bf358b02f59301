#ifndef SDECOMP_FIELD_HPP
#define SDECOMP_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sdecomp/error.hpp"

namespace sdecomp {

/// Element of F_q addressed by its index in [0, q). The little-endian base-p
/// digits of the index are the coefficients of the residue polynomial, so for
/// prime fields the index is the residue itself.
struct Elem {
    std::uint32_t index = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t i) : index(i) {}
    constexpr auto operator<=>(const Elem&) const = default;
};

/// Little-endian base-p digits e_0, e_1, ... of a non-negative integer.
struct PExpansion {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 2;

    /// Digit j, or 0 past the stored length.
    std::uint32_t digit(std::size_t j) const noexcept { return j < digits.size() ? digits[j] : 0; }
    std::uint64_t value() const noexcept;

    bool operator==(const PExpansion&) const = default;
};

bool is_prime(std::uint64_t m) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Writes q = p^n; throws NotAPrimePower otherwise.
struct PrimePower {
    std::uint32_t p;
    std::uint32_t n;
};
PrimePower split_prime_power(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

PExpansion base_p_digits(std::uint64_t m, std::uint32_t p);

struct BinomResidue {
    bool nonzero;
    std::uint32_t residue;  // C(top, bottom) mod p
};

/// C(top, bottom) mod p through Lucas' theorem: the product of digitwise
/// binomials, nonzero iff no digit of bottom exceeds the matching digit of top.
/// bottom > top gives residue 0.
BinomResidue lucas_binom(std::uint64_t top, std::uint64_t bottom, std::uint32_t p);

/// Lucas evaluation backed by a factorial table mod p, for hot loops that
/// evaluate many binomials with the same prime.
class BinomialModP {
   public:
    explicit BinomialModP(std::uint32_t p);

    std::uint32_t prime() const noexcept { return p_; }
    std::uint32_t residue(std::uint64_t top, std::uint64_t bottom) const noexcept;
    bool nonzero(std::uint64_t top, std::uint64_t bottom) const noexcept {
        return residue(top, bottom) != 0;
    }

   private:
    std::uint32_t small(std::uint32_t a, std::uint32_t b) const noexcept;

    std::uint32_t p_;
    std::vector<std::uint32_t> fact_;
    std::vector<std::uint32_t> inv_fact_;
};

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

/// Immutable description of F_{p^n}: the lexicographically smallest monic
/// irreducible modulus (low-degree coefficients compared first), the
/// smallest-index primitive element, and full exp/log tables.
class FieldCtx {
   public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    /// n+1 coefficients, low degree first, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return generator_; }
    /// Distinct primes dividing q-1.
    const std::vector<std::uint64_t>& order_primes() const noexcept { return order_primes_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Maps an integer into the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;

    bool valid(Elem x) const noexcept { return x.index < q_; }
    bool same_field(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b.index]); }
    Elem neg(Elem a) const noexcept { return neg_[a.index]; }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; pow(0, 0) = 1.
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Discrete log base the generator; kNoLog for zero.
    std::uint32_t dlog(Elem x) const noexcept { return dlog_[x.index]; }
    /// generator^k.
    Elem exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }

    std::vector<std::uint32_t> coordinates(Elem x) const;
    Elem from_coordinates(std::span<const std::uint32_t> coords) const;

   private:
    friend std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, std::uint32_t n);
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem generator_;
    std::vector<std::uint64_t> order_primes_;
    std::vector<std::uint32_t> dlog_;
    std::vector<Elem> exp_;
    std::vector<Elem> neg_;
    std::vector<std::uint32_t> pow_p_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^n}. Deterministic: equal (p, n) give identical contexts.
/// Throws CompositeP, FieldTooLarge or InvalidArgument (n = 0).
FieldPtr make_field(std::uint32_t p, std::uint32_t n);

/// make_field from the field order.
FieldPtr make_field_of_order(std::uint64_t q);

/// Irreducibility of a monic polynomial over F_p (coefficients low first),
/// by root search plus Rabin's gcd test.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace sdecomp

#endif  // SDECOMP_FIELD_HPP
