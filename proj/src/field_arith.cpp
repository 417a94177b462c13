#include "eulerq/field_arith.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace eulerq {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1U) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    if (base < 0 || exponent < 0) throw std::invalid_argument("mod_pow: negative operand");
    return boost::multiprecision::powm(base, exponent, modulus);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t phi = n;
    for (auto q : prime_factors(n)) phi = phi / q * (q - 1);
    return phi;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (gcd_u64(g % modulus, modulus) != 1)
        throw std::invalid_argument("multiplicative_order: " + std::to_string(g) +
                                    " is not coprime to " + std::to_string(modulus));
    if (modulus == 1) return 1;
    std::uint64_t order = euler_phi(modulus);
    for (auto q : prime_factors(order)) {
        while (order % q == 0 && powmod_u64(g, order / q, modulus) == 1) order /= q;
    }
    return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t n) {
    const std::uint64_t phi = euler_phi(n);
    for (std::uint64_t g = 1; g < std::max<std::uint64_t>(n, 2); ++g) {
        if (gcd_u64(g, n) == 1 && multiplicative_order(g, n) == phi) return g;
    }
    throw std::invalid_argument("no primitive root modulo " + std::to_string(n));
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
    std::uint64_t r = 1;
    while (exponent-- > 0) r *= base;
    return r;
}

// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return mulmod_u64(a, b, p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    return powmod_u64(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return powmod_u64(a, p_ - 2, p_);
}

// Polynomial

Polynomial::Polynomial(PrimeField field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= field_.p();
    trim();
}

Polynomial Polynomial::monomial(PrimeField field, std::size_t degree, std::uint64_t coeff) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::x_pow_minus_one(PrimeField field, std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[n] = 1;
    c[0] = field.neg(1);
    if (n == 0) c[0] = 0;
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::from_exponents(PrimeField field, std::span<const std::uint64_t> exponents) {
    if (exponents.empty()) return Polynomial(field);
    std::vector<std::uint64_t> c(*std::max_element(exponents.begin(), exponents.end()) + 1, 0);
    for (auto e : exponents) c[e] = field.add(c[e], 1);
    return Polynomial(field, std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Polynomial::evaluate(std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    x %= field_.p();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const auto lc_inv = field_.inv(leading());
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& x : c) x = field_.mul(x, lc_inv);
    return Polynomial(field_, std::move(c));
}

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b, const char* what) {
    if (!(a.field() == b.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b, "poly add");
    const auto& f = a.field();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b, "poly sub");
    const auto& f = a.field();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b, "poly mul");
    const auto& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Polynomial(f, std::move(c));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
        if (i >= 1) os << "X";
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b, "poly_divrem");
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by the zero polynomial");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};

    std::vector<std::uint64_t> rem(a.coeffs());
    std::vector<std::uint64_t> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const auto& bc = b.coeffs();
    const auto db = bc.size() - 1;
    const auto lead_inv = f.inv(b.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const auto factor = f.mul(rem[i], lead_inv);
        const auto shift = i - db;
        quo[shift] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(factor, bc[j]));
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divrem(a, b).second; }

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b, "poly_gcd");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both operands are zero");
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool divides(const Polynomial& d, const Polynomial& a) { return poly_mod(a, d).is_zero(); }

namespace gf2 {

BitPoly BitPoly::x_pow_minus_one(std::size_t n) {
    BitPoly p(n + 1);
    p.flip(n);
    p.flip(0);
    return p;
}

long BitPoly::degree() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) return static_cast<long>(w * 64 + 63 - std::countl_zero(words_[w]));
    }
    return -1;
}

void BitPoly::add_shifted(const BitPoly& b, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    const std::size_t need = b.words_.size() + ws + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < b.words_.size(); ++i) {
        const auto w = b.words_[i];
        if (w == 0) continue;
        words_[i + ws] ^= w << bs;
        if (bs != 0) words_[i + ws + 1] ^= w >> (64 - bs);
    }
}

void BitPoly::reduce(const BitPoly& b) {
    const long db = b.degree();
    for (long d = degree(); d >= db; d = degree()) add_shifted(b, static_cast<std::size_t>(d - db));
}

long gcd_degree(BitPoly a, BitPoly b) {
    while (!b.is_zero()) {
        a.reduce(b);
        std::swap(a, b);
    }
    return a.degree();
}

} // namespace gf2

} // namespace eulerq
