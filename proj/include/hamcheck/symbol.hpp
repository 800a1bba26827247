#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hamcheck {

/// The families of coordinates an expression may depend on.
///
/// Field symbols are u^i and their x-jets u^i_σ; covector symbols are the
/// cotangent-covering variables p_i and p_{i,σ}; vector symbols are the
/// tangent-covering variables q^i and q^i_σ. Parameters are named constants
/// treated as independent transcendentals.
enum class SymbolKind : std::uint8_t {
    Parameter = 0,
    Field = 1,
    Covector = 2,
    Vector = 3,
};

/// A coordinate of the jet space, packed into a single 32-bit key.
///
/// The key layout is `kind:2 | index:14 | order:16`. Parameters store an
/// interned name id in the index slot. Comparing keys gives the fixed
/// variable order used by every monomial ordering in the library.
class Symbol {
public:
    static constexpr int kMaxIndex = (1 << 14) - 1;
    static constexpr int kMaxOrder = (1 << 16) - 1;

    static Symbol u(int index, int order = 0);
    static Symbol p(int index, int order = 0);
    static Symbol q(int index, int order = 0);
    static Symbol parameter(std::string_view name);
    static Symbol from_key(std::uint32_t key) { return Symbol(key); }

    SymbolKind kind() const { return static_cast<SymbolKind>(key_ >> 30); }
    int index() const { return static_cast<int>((key_ >> 16) & 0x3FFF); }
    int order() const { return static_cast<int>(key_ & 0xFFFF); }
    std::uint32_t key() const { return key_; }

    bool is_parameter() const { return kind() == SymbolKind::Parameter; }
    /// u^i_σ with σ ≥ 1.
    bool is_u_jet() const { return kind() == SymbolKind::Field && order() > 0; }

    /// Same family and index, x-derivative order raised by `by`.
    Symbol shifted(int by = 1) const;

    /// Printed form: `u1`, `u1_x`, `u1_xx`, `p2_x`, `q1`, or the parameter name.
    std::string name() const;

    auto operator<=>(const Symbol&) const = default;

private:
    explicit Symbol(std::uint32_t key) : key_(key) {}
    static Symbol make(SymbolKind kind, int index, int order);

    std::uint32_t key_ = 0;
};

/// Whether `name` is usable as a parameter identifier (not u<n>, p<n>, q<n>).
bool is_valid_parameter_name(std::string_view name);

} // namespace hamcheck
