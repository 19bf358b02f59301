#ifndef SDECOMP_LINALG_HPP
#define SDECOMP_LINALG_HPP

#include <optional>
#include <vector>

#include "sdecomp/field.hpp"

namespace sdecomp {

using FqMatrix = std::vector<std::vector<Elem>>;

/// Solves M x = rhs by Gaussian elimination over F_q; nullopt when M is singular.
std::optional<std::vector<Elem>> solve_linear(const FieldCtx& f, FqMatrix m, std::vector<Elem> rhs);

/// Determinant by elimination over F_q.
Elem determinant(const FieldCtx& f, FqMatrix m);

}  // namespace sdecomp

#endif  // SDECOMP_LINALG_HPP
