#include "sdecomp/subset.hpp"

#include <string>

namespace sdecomp {

namespace {

std::vector<bits::Word> blank(const FieldCtx& f) { return std::vector<bits::Word>(bits::word_count(f.q()), 0); }

void require_nonempty(const FqSubset& x, const char* what) {
    if (x.empty()) throw Error(ErrorKind::EmptyInput, what);
}

}  // namespace

FqSubset::FqSubset(FieldPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw Error(ErrorKind::InvalidArgument, "null field context");
    words_ = blank(*ctx_);
}

FqSubset::FqSubset(FieldPtr ctx, std::span<const std::uint32_t> indices) : FqSubset(std::move(ctx)) {
    for (auto i : indices) {
        if (i >= ctx_->q()) throw Error(ErrorKind::InvalidArgument, "element index " + std::to_string(i) + " out of range");
        bits::set(words_, i);
    }
    card_ = bits::popcount(words_);
}

FqSubset::FqSubset(FieldPtr ctx, std::initializer_list<std::uint32_t> indices)
    : FqSubset(std::move(ctx), std::span<const std::uint32_t>(indices.begin(), indices.size())) {}

FqSubset::FqSubset(FieldPtr ctx, std::span<const Elem> elems) : FqSubset(std::move(ctx)) {
    for (auto e : elems) {
        if (!ctx_->valid(e)) throw Error(ErrorKind::InvalidArgument, "element index out of range");
        bits::set(words_, e.index);
    }
    card_ = bits::popcount(words_);
}

FqSubset FqSubset::from_words(FieldPtr ctx, std::vector<bits::Word> words) {
    if (words.size() != bits::word_count(ctx->q())) throw Error(ErrorKind::InvalidArgument, "word count mismatch");
    const std::size_t card = bits::popcount(words);
    return FqSubset(std::move(ctx), std::move(words), card);
}

FqSubset FqSubset::full(FieldPtr ctx) {
    auto w = blank(*ctx);
    for (std::uint32_t i = 0; i < ctx->q(); ++i) bits::set(w, i);
    return from_words(std::move(ctx), std::move(w));
}

FqSubset FqSubset::nonzero(FieldPtr ctx) {
    auto w = blank(*ctx);
    for (std::uint32_t i = 1; i < ctx->q(); ++i) bits::set(w, i);
    return from_words(std::move(ctx), std::move(w));
}

std::vector<std::uint32_t> FqSubset::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(card_);
    bits::for_each(words_, [&](std::uint32_t i) { out.push_back(i); });
    return out;
}

std::vector<Elem> FqSubset::elements() const {
    std::vector<Elem> out;
    out.reserve(card_);
    bits::for_each(words_, [&](std::uint32_t i) { out.emplace_back(i); });
    return out;
}

bool FqSubset::is_subset_of(const FqSubset& other) const {
    require_same_field(*this, other);
    return bits::subset_of(words_, other.words_);
}

bool FqSubset::operator==(const FqSubset& other) const {
    return ctx_->same_field(*other.ctx_) && words_ == other.words_;
}

void require_same_field(const FqSubset& x, const FqSubset& y) {
    if (!x.field().same_field(y.field()))
        throw Error(ErrorKind::ContextMismatch,
                    "F_" + std::to_string(x.field().q()) + " vs F_" + std::to_string(y.field().q()));
}

FqSubset sumset(const FqSubset& x, const FqSubset& y) {
    require_same_field(x, y);
    require_nonempty(x, "sumset of an empty set");
    require_nonempty(y, "sumset of an empty set");
    const FieldCtx& f = x.field();
    const FqSubset& small = x.size() <= y.size() ? x : y;
    const FqSubset& large = x.size() <= y.size() ? y : x;
    auto out = blank(f);
    if (f.n() == 1) {
        bits::for_each(small.words(), [&](std::uint32_t a) { bits::rotate_or(out, large.words(), a, f.q()); });
    } else {
        const auto ys = large.indices();
        bits::for_each(small.words(), [&](std::uint32_t a) {
            for (auto yv : ys) bits::set(out, f.add(Elem{a}, Elem{yv}).index);
        });
    }
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

FqSubset negate(const FqSubset& x) {
    const FieldCtx& f = x.field();
    auto out = blank(f);
    bits::for_each(x.words(), [&](std::uint32_t a) { bits::set(out, f.neg(Elem{a}).index); });
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

FqSubset intersect(const FqSubset& x, const FqSubset& y) {
    require_same_field(x, y);
    std::vector<bits::Word> out(x.words().begin(), x.words().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] &= y.words()[i];
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

FqSubset unite(const FqSubset& x, const FqSubset& y) {
    require_same_field(x, y);
    std::vector<bits::Word> out(x.words().begin(), x.words().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] |= y.words()[i];
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

FqSubset translate(const FqSubset& x, Elem t) {
    const FieldCtx& f = x.field();
    if (!f.valid(t)) throw Error(ErrorKind::InvalidArgument, "translation out of range");
    auto out = blank(f);
    if (f.n() == 1) {
        bits::rotate_or(out, x.words(), t.index, f.q());
    } else {
        bits::for_each(x.words(), [&](std::uint32_t a) { bits::set(out, f.add(Elem{a}, t).index); });
    }
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

FqSubset dilate(const FqSubset& x, Elem lambda) {
    const FieldCtx& f = x.field();
    if (lambda.index == 0) throw Error(ErrorKind::ZeroDilation, "dilation by zero");
    if (!f.valid(lambda)) throw Error(ErrorKind::InvalidArgument, "dilation out of range");
    auto out = blank(f);
    bits::for_each(x.words(), [&](std::uint32_t a) { bits::set(out, f.mul(Elem{a}, lambda).index); });
    return FqSubset::from_words(x.field_ptr(), std::move(out));
}

std::uint64_t cauchy_davenport_lb(const FqSubset& x, const FqSubset& y) {
    require_nonempty(x, "Cauchy-Davenport bound of an empty set");
    require_nonempty(y, "Cauchy-Davenport bound of an empty set");
    const std::uint64_t s = x.size() + y.size() - 1;
    return std::min<std::uint64_t>(x.field().p(), s);
}

RuzsaCheck ruzsa_check(const FqSubset& a, const FqSubset& b, const FqSubset& c) {
    require_nonempty(a, "Ruzsa check of an empty set");
    require_nonempty(b, "Ruzsa check of an empty set");
    require_nonempty(c, "Ruzsa check of an empty set");
    const auto ab = sumset(a, b);
    const std::uint64_t abc = sumset(ab, c).size();
    const std::uint64_t lhs = abc * abc;
    const std::uint64_t rhs = std::uint64_t{ab.size()} * sumset(b, c).size() * sumset(c, a).size();
    return {lhs, rhs, lhs <= rhs};
}

}  // namespace sdecomp
