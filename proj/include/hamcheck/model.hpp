#pragma once

#include "hamcheck/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcheck {

/// Base of every error the engine throws. Degeneracy that merely routes a
/// computation elsewhere is reported through std::optional instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that needs an invertible matrix was handed one with det ≡ 0.
class Degenerate : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// u^i_t = V^i_j(u) u^j_x + W^i(u).
struct QuasilinearSystem {
    int n = 0;
    Tensor V; // (1,1)
    Tensor W; // (1,0)

    static QuasilinearSystem zero(int n);
    void validate() const;
};

/// ω^{ij}(u).
struct UltralocalOperator {
    Tensor omega; // (2,0)
};

/// g^{ij}(u) ∂_x + b^{ij}_k(u) u^k_x.
struct FirstOrderOperator {
    Tensor g; // (2,0)
    Tensor b; // slots upper, upper, lower

    static FirstOrderOperator zero(int n);
};

/// First-order part plus ultralocal part.
struct NonHomogeneousOperator {
    FirstOrderOperator first;
    UltralocalOperator zero;

    int dim() const { return first.g.dim(); }
    static NonHomogeneousOperator null(int n);
    void validate() const;
};

/// Throws DimensionMismatch unless all pieces share one dimension.
void require_same_dimension(const QuasilinearSystem& sys, const NonHomogeneousOperator& op);

/// True when every entry depends on field variables u^i (order 0) and
/// parameters only.
bool depends_on_fields_only(const Tensor& t);

} // namespace hamcheck
