#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerq {

using BigInt = boost::multiprecision::cpp_int;

/// base^exponent mod modulus, exact for arbitrary sizes. Requires modulus >= 2.
BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient by trial-division factorisation.
std::uint64_t euler_phi(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Least t > 0 with g^t == 1 (mod modulus). Throws std::invalid_argument
/// when gcd(g, modulus) != 1 or modulus < 1.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t modulus);

/// Smallest positive primitive root modulo n; throws if none exists.
std::uint64_t smallest_primitive_root(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

class PrimeField {
public:
    /// Throws std::invalid_argument if p is not prime.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error on zero.
    std::uint64_t inv(std::uint64_t a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// Dense univariate polynomial over a prime field. coeffs()[i] is the
/// coefficient of X^i; the zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(PrimeField field) : field_(field) {}
    /// Coefficients are reduced mod p and trailing zeros are trimmed.
    Polynomial(PrimeField field, std::vector<std::uint64_t> coeffs);

    static Polynomial monomial(PrimeField field, std::size_t degree, std::uint64_t coeff = 1);
    /// X^n - 1
    static Polynomial x_pow_minus_one(PrimeField field, std::size_t n);
    /// Sum of X^e over the given exponents (with multiplicity).
    static Polynomial from_exponents(PrimeField field, std::span<const std::uint64_t> exponents);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t evaluate(std::uint64_t x) const noexcept;

    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    PrimeField field_;
    std::vector<std::uint64_t> coeffs_;
};

/// (quotient, remainder) with a = q*b + r, deg r < deg b.
/// Throws std::invalid_argument on field mismatch, std::domain_error if b == 0.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b);

Polynomial poly_mod(const Polynomial& a, const Polynomial& b);

/// Monic gcd. Throws on field mismatch or when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

bool divides(const Polynomial& d, const Polynomial& a);

namespace gf2 {

/// Bit-packed polynomial over F_2: bit i of word i/64 is the X^i coefficient.
/// Used on the hot path of the exhaustive k-error search.
class BitPoly {
public:
    BitPoly() = default;
    explicit BitPoly(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    static BitPoly x_pow_minus_one(std::size_t n);

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const noexcept {
        return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U);
    }
    long degree() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }

    /// In-place remainder modulo b (b nonzero).
    void reduce(const BitPoly& b);
    /// Adds b * X^shift.
    void add_shifted(const BitPoly& b, std::size_t shift);

private:
    std::vector<std::uint64_t> words_;
};

/// Degree of gcd(a, b); both consumed. At least one must be nonzero.
long gcd_degree(BitPoly a, BitPoly b);

} // namespace gf2

} // namespace eulerq
