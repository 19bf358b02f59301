#include "sdecomp/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sdecomp {

SubgroupSpec subgroup(const FieldPtr& ctx, std::uint32_t d) {
    const std::uint32_t order = ctx->q() - 1;
    if (d == 0 || order % d != 0)
        throw Error(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(order));
    std::vector<std::uint32_t> members;
    members.reserve(order / d);
    for (std::uint32_t k = 0; k < order; k += d) members.push_back(ctx->exp(k).index);
    return {d, order / d, FqSubset(ctx, members)};
}

Character::Character(FieldPtr ctx, std::uint32_t d) : ctx_(std::move(ctx)), d_(d) {
    if (d == 0 || (ctx_->q() - 1) % d != 0)
        throw Error(ErrorKind::NotADivisor, std::to_string(d) + " does not divide q-1");
    roots_.reserve(d);
    for (std::uint32_t k = 0; k < d; ++k) roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / d));
}

std::uint32_t Character::residue_class(Elem x) const noexcept {
    const std::uint32_t l = ctx_->dlog(x);
    return l == kNoLog ? kNoLog : l % d_;
}

std::complex<double> Character::operator()(Elem x) const noexcept {
    const std::uint32_t k = residue_class(x);
    return k == kNoLog ? std::complex<double>{} : roots_[k];
}

double double_char_bound(std::uint64_t q, std::uint64_t size_a, std::uint64_t size_b) {
    const double qd = static_cast<double>(q);
    const double na = static_cast<double>(size_a), nb = static_cast<double>(size_b);
    const double fa = std::max(0.0, 1.0 - na / qd), fb = std::max(0.0, 1.0 - nb / qd);
    return std::sqrt(qd * na * nb * fa * fb);
}

DoubleCharSum double_char_sum(const Character& chi, const FqSubset& a, const FqSubset& b) {
    require_same_field(a, b);
    if (!chi.field().same_field(a.field())) throw Error(ErrorKind::ContextMismatch, "character over another field");
    if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "character sum over an empty set");
    if (chi.order() < 2) throw Error(ErrorKind::TrivialCharacter, "character of order 1");

    const FieldCtx& f = a.field();
    DoubleCharSum out{};
    out.class_counts.assign(chi.order(), 0);
    const auto bs = b.elements();
    for (auto x : a.elements()) {
        for (auto y : bs) {
            const std::uint32_t k = chi.residue_class(f.add(x, y));
            if (k == kNoLog)
                ++out.zero_count;
            else
                ++out.class_counts[k];
        }
    }
    std::complex<double> s{};
    for (std::uint32_t k = 0; k < chi.order(); ++k)
        if (out.class_counts[k]) s += static_cast<double>(out.class_counts[k]) * chi.roots()[k];
    out.sum = s;
    out.bound = double_char_bound(f.q(), a.size(), b.size());
    out.tight_case = out.class_counts[0] == std::uint64_t{a.size()} * b.size();
    return out;
}

ProductBoundCheck product_bound_check(const FqSubset& a, const FqSubset& b, std::uint32_t d) {
    const auto sd = subgroup(a.field_ptr(), d);
    if (!sumset(a, b).is_subset_of(sd.members))
        throw Error(ErrorKind::HypothesisViolated, "A+B is not contained in S_" + std::to_string(d));
    const std::uint64_t product = std::uint64_t{a.size()} * b.size();
    return {product, product < a.field().q()};
}

}  // namespace sdecomp
