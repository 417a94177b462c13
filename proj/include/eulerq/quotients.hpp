#pragma once

#include <cstdint>
#include <vector>

#include "eulerq/field_arith.hpp"

namespace eulerq {

/// The pair (p, r) with p an odd prime and r >= 1.
class PrimePowerModulus {
public:
    /// Throws std::invalid_argument unless p is an odd prime and r >= 1.
    PrimePowerModulus(std::uint64_t p, unsigned r);

    std::uint64_t p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    /// p^r
    const BigInt& modulus() const noexcept { return modulus_; }
    /// p^(r-1) (p-1)
    const BigInt& phi() const noexcept { return phi_; }
    /// p^(r+1) as a machine integer: the length of one period of the derived
    /// sequences. Throws std::overflow_error if it does not fit.
    std::uint64_t sequence_period() const;

    friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

private:
    std::uint64_t p_;
    unsigned r_;
    BigInt modulus_;
    BigInt phi_;
};

struct QuotientDigits {
    PrimePowerModulus modulus;
    BigInt u;
    BigInt q;
    /// digits[j] = a_j(u), least significant first; size r.
    std::vector<std::uint64_t> digits;
};

/// Q_r(u) in [0, p^r); zero when p divides u.
BigInt euler_quotient(const PrimePowerModulus& m, const BigInt& u);

/// Base-p digits a_0(u), ..., a_{r-1}(u) of Q_r(u).
QuotientDigits level_digits(const PrimePowerModulus& m, const BigInt& u);

/// H_{r-1}(u): the top p-adic digit of Q_r(u). For r = 1 this is the Fermat quotient.
std::uint64_t new_quotient_h(const PrimePowerModulus& m, const BigInt& u);

/// F^{(i)}(u): digit i of u^(p-1) in base p, zero when p | u. Only m.p() is used.
/// Throws std::invalid_argument if order == 0.
std::uint64_t fermat_quotient_order(const PrimePowerModulus& m, unsigned order, const BigInt& u);

/// Q_r(u) == Q_s(u) (mod p^s). Throws std::invalid_argument unless 0 < s < r.
bool verify_congruence_qrs(const PrimePowerModulus& m, unsigned s, const BigInt& u);

} // namespace eulerq
