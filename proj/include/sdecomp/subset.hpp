#ifndef SDECOMP_SUBSET_HPP
#define SDECOMP_SUBSET_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sdecomp/bits.hpp"
#include "sdecomp/field.hpp"

namespace sdecomp {

/// A subset of F_q stored as a length-q bit array with cached cardinality.
/// Values never change after construction; every operation returns a new set.
class FqSubset {
   public:
    explicit FqSubset(FieldPtr ctx);
    FqSubset(FieldPtr ctx, std::span<const std::uint32_t> indices);
    FqSubset(FieldPtr ctx, std::initializer_list<std::uint32_t> indices);
    FqSubset(FieldPtr ctx, std::span<const Elem> elems);
    /// Adopts a word array; bits at positions >= q must be clear.
    static FqSubset from_words(FieldPtr ctx, std::vector<bits::Word> words);
    static FqSubset full(FieldPtr ctx);
    static FqSubset nonzero(FieldPtr ctx);

    const FieldCtx& field() const noexcept { return *ctx_; }
    const FieldPtr& field_ptr() const noexcept { return ctx_; }

    std::size_t size() const noexcept { return card_; }
    bool empty() const noexcept { return card_ == 0; }
    bool contains(Elem x) const noexcept { return x.index < ctx_->q() && bits::test(words_, x.index); }
    std::span<const bits::Word> words() const noexcept { return words_; }

    /// Sorted element indices.
    std::vector<std::uint32_t> indices() const;
    std::vector<Elem> elements() const;

    bool is_subset_of(const FqSubset& other) const;
    bool operator==(const FqSubset& other) const;

   private:
    FqSubset(FieldPtr ctx, std::vector<bits::Word> words, std::size_t card)
        : ctx_(std::move(ctx)), words_(std::move(words)), card_(card) {}

    FieldPtr ctx_;
    std::vector<bits::Word> words_;
    std::size_t card_ = 0;
};

/// Throws ContextMismatch when the sets live in different fields.
void require_same_field(const FqSubset& x, const FqSubset& y);

FqSubset sumset(const FqSubset& x, const FqSubset& y);
FqSubset negate(const FqSubset& x);
FqSubset intersect(const FqSubset& x, const FqSubset& y);
FqSubset unite(const FqSubset& x, const FqSubset& y);
FqSubset translate(const FqSubset& x, Elem t);
/// {lambda * x}; throws ZeroDilation for lambda = 0.
FqSubset dilate(const FqSubset& x, Elem lambda);

/// min{p, |X| + |Y| - 1}, a lower bound for |X + Y|.
std::uint64_t cauchy_davenport_lb(const FqSubset& x, const FqSubset& y);

struct RuzsaCheck {
    std::uint64_t lhs;  // |A+B+C|^2
    std::uint64_t rhs;  // |A+B| |B+C| |C+A|
    bool holds;
};

RuzsaCheck ruzsa_check(const FqSubset& a, const FqSubset& b, const FqSubset& c);

}  // namespace sdecomp

#endif  // SDECOMP_SUBSET_HPP
