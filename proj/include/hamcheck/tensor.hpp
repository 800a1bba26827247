#pragma once

#include "hamcheck/rational_expr.hpp"

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamcheck {

/// Index variance of one tensor slot.
enum class Slot : unsigned char { Upper, Lower };

/// Dense tensor of RationalExpr over an n-dimensional index range, with
/// explicit variance per slot. Indices are zero-based in the API and
/// printed one-based in reports.
class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, std::vector<Slot> slots);

    /// n×n with both slots upper (g^{ij}, ω^{ij}).
    static Tensor bivector(int dim) { return Tensor(dim, {Slot::Upper, Slot::Upper}); }
    /// n×n mixed (1,1) tensor (V^i_j).
    static Tensor endomorphism(int dim) { return Tensor(dim, {Slot::Upper, Slot::Lower}); }
    static Tensor vector(int dim) { return Tensor(dim, {Slot::Upper}); }
    static Tensor identity(int dim, std::vector<Slot> slots = {Slot::Upper, Slot::Lower});
    /// Builds a rank-2 tensor from nested rows.
    static Tensor from_rows(const std::vector<std::vector<RationalExpr>>& rows, std::vector<Slot> slots);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t size() const { return data_.size(); }

    RationalExpr& at(std::span<const int> idx) { return data_[offset(idx)]; }
    const RationalExpr& at(std::span<const int> idx) const { return data_[offset(idx)]; }

    template <typename... I>
    RationalExpr& operator()(I... idx)
    {
        const int arr[] = {static_cast<int>(idx)...};
        return at(std::span<const int>(arr, sizeof...(I)));
    }
    template <typename... I>
    const RationalExpr& operator()(I... idx) const
    {
        const int arr[] = {static_cast<int>(idx)...};
        return at(std::span<const int>(arr, sizeof...(I)));
    }

    /// Flat storage, row-major (last index fastest).
    std::vector<RationalExpr>& data() { return data_; }
    const std::vector<RationalExpr>& data() const { return data_; }
    /// Multi-index of a flat position.
    std::vector<int> index_of(std::size_t flat) const;

    bool is_zero() const;
    std::vector<std::pair<std::vector<int>, RationalExpr>> nonzero_entries() const;
    /// No entry contains a symbol satisfying `pred`.
    bool is_free_of(const std::function<bool(Symbol)>& pred) const;

    /// Builds a tensor by evaluating `f` at every multi-index.
    static Tensor generate(int dim, std::vector<Slot> slots,
                           const std::function<RationalExpr(std::span<const int>)>& f);
    Tensor map(const std::function<RationalExpr(const RationalExpr&)>& f) const;

    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a);
    Tensor scaled(const RationalExpr& c) const;

    /// Structural and value equality (variance included).
    bool operator==(const Tensor& o) const = default;

private:
    std::size_t offset(std::span<const int> idx) const;

    int dim_ = 0;
    std::vector<Slot> slots_;
    std::vector<RationalExpr> data_;
};

using ExprMatrix = Tensor;
using ExprTensor3 = Tensor;

/// Matrix product over the second index of `a` and first of `b`.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& m);

/// Exact determinant of a rank-2 tensor (cofactor expansion).
RationalExpr det(const Tensor& m);
/// Adjugate-based inverse; nullopt when the matrix is singular (det ≡ 0).
/// Slot variance of the result is the flip of the input.
std::optional<Tensor> inverse(const Tensor& m);

} // namespace hamcheck
