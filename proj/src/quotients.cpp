#include "eulerq/quotients.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace eulerq {

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, unsigned r) : p_(p), r_(r) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    modulus_ = boost::multiprecision::pow(BigInt(p), r);
    phi_ = modulus_ / p * (p - 1);
}

std::uint64_t PrimePowerModulus::sequence_period() const {
    const BigInt period = modulus_ * p_;
    if (period > std::numeric_limits<std::uint32_t>::max())
        throw std::overflow_error("period p^(r+1) is too large to materialise");
    return static_cast<std::uint64_t>(period);
}

namespace {

bool divisible(const BigInt& u, std::uint64_t p) { return u % p == 0; }

} // namespace

BigInt euler_quotient(const PrimePowerModulus& m, const BigInt& u) {
    if (u < 0) throw std::invalid_argument("euler_quotient: u must be non-negative");
    if (divisible(u, m.p())) return 0;
    // u^phi mod p^{2r} = 1 + Q p^r, with Q already in [0, p^r).
    const BigInt square = m.modulus() * m.modulus();
    const BigInt power = mod_pow(u, m.phi(), square);
    return (power - 1) / m.modulus();
}

QuotientDigits level_digits(const PrimePowerModulus& m, const BigInt& u) {
    QuotientDigits out{m, u, euler_quotient(m, u), {}};
    out.digits.reserve(m.r());
    BigInt rest = out.q;
    for (unsigned j = 0; j < m.r(); ++j) {
        out.digits.push_back(static_cast<std::uint64_t>(rest % m.p()));
        rest /= m.p();
    }
    return out;
}

std::uint64_t new_quotient_h(const PrimePowerModulus& m, const BigInt& u) {
    const BigInt q = euler_quotient(m, u);
    return static_cast<std::uint64_t>(q / (m.modulus() / m.p()));
}

std::uint64_t fermat_quotient_order(const PrimePowerModulus& m, unsigned order, const BigInt& u) {
    if (order == 0) throw std::invalid_argument("fermat_quotient_order: order must be >= 1");
    if (u < 0) throw std::invalid_argument("fermat_quotient_order: u must be non-negative");
    const std::uint64_t p = m.p();
    if (divisible(u, p)) return 0;
    const BigInt low = boost::multiprecision::pow(BigInt(p), order);
    const BigInt power = mod_pow(u, p - 1, low * p);
    return static_cast<std::uint64_t>(power / low);
}

bool verify_congruence_qrs(const PrimePowerModulus& m, unsigned s, const BigInt& u) {
    if (s == 0 || s >= m.r()) throw std::invalid_argument("verify_congruence_qrs: need 0 < s < r");
    const PrimePowerModulus lower(m.p(), s);
    return euler_quotient(m, u) % lower.modulus() == euler_quotient(lower, u);
}

} // namespace eulerq
