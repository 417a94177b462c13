#include "doctest.h"

#include "eulerq/quotients.hpp"
#include "eulerq/verify.hpp"

using namespace eulerq;

namespace {

/// Q_r(u) straight from the definition with the full integer power.
BigInt quotient_by_definition(std::uint64_t p, unsigned r, std::uint64_t u) {
    if (u % p == 0) return 0;
    const BigInt pr = boost::multiprecision::pow(BigInt(p), r);
    const auto phi = static_cast<unsigned>(pr / p * (p - 1));
    return ((boost::multiprecision::pow(BigInt(u), phi) - 1) / pr) % pr;
}

} // namespace

TEST_CASE("PrimePowerModulus validation") {
    CHECK_THROWS_AS(PrimePowerModulus(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerModulus(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerModulus(3, 0), std::invalid_argument);
    const PrimePowerModulus m(5, 3);
    CHECK(m.modulus() == 125);
    CHECK(m.phi() == 100);
    CHECK(m.sequence_period() == 625);
}

TEST_CASE("euler_quotient examples") {
    CHECK(euler_quotient({3, 1}, 2) == 1);
    CHECK(euler_quotient({5, 2}, 10) == 0);
    CHECK(euler_quotient({3, 2}, 2) == 7);
    CHECK(euler_quotient({3, 2}, 0) == 0);
}

TEST_CASE("euler_quotient matches the full-power definition") {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const PrimePowerModulus m(p, r);
        for (std::uint64_t u = 0; u < 120; ++u) REQUIRE(euler_quotient(m, u) == quotient_by_definition(p, r, u));
    }
}

TEST_CASE("euler_quotient accepts large u and large moduli") {
    const PrimePowerModulus m(13, 4);
    const BigInt u = (BigInt(1) << 90) + 1;
    const BigInt pr = m.modulus();
    const BigInt expected = (mod_pow(u, m.phi(), pr * pr) - 1) / pr;
    CHECK(euler_quotient(m, u) == expected);
    CHECK(euler_quotient(m, u) < pr);
}

TEST_CASE("level_digits") {
    const auto zero = level_digits({3, 2}, 3);
    CHECK(zero.q == 0);
    CHECK(zero.digits == std::vector<std::uint64_t>{0, 0});

    const auto d = level_digits({3, 2}, 2);
    CHECK(d.q == 7);
    CHECK(d.digits == std::vector<std::uint64_t>{1, 2});

    const PrimePowerModulus m(5, 3);
    for (std::uint64_t u = 0; u < 625; ++u) {
        const auto x = level_digits(m, u);
        BigInt recomposed = 0;
        for (std::size_t j = x.digits.size(); j-- > 0;) recomposed = recomposed * 5 + x.digits[j];
        REQUIRE(recomposed == x.q);
    }
}

TEST_CASE("new_quotient_h examples") {
    CHECK(new_quotient_h({3, 2}, 2) == 2);
    // (Q_2 - Q_1)/3 with Q_2(2) = 7, Q_1(2) = 1
    CHECK((euler_quotient({3, 2}, 2) - euler_quotient({3, 1}, 2)) / 3 == 2);
    for (std::uint64_t l = 0; l < 20; ++l) CHECK(new_quotient_h({7, 3}, 7 * l) == 0);
    CHECK(new_quotient_h({3, 1}, 2) == euler_quotient({3, 1}, 2));
}

TEST_CASE("new_quotient_h equals the difference-of-quotients form") {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}}) {
        const PrimePowerModulus m(p, r);
        const PrimePowerModulus lower(p, r - 1);
        const BigInt scale = lower.modulus();
        for (std::uint64_t u = 0; u < m.sequence_period(); ++u) {
            const BigInt diff = euler_quotient(m, u) - euler_quotient(lower, u);
            REQUIRE(diff % scale == 0);
            BigInt h = (diff / scale) % p;
            if (h < 0) h += p;
            REQUIRE(new_quotient_h(m, u) == h);
        }
    }
}

TEST_CASE("fermat_quotient_order examples") {
    CHECK(fermat_quotient_order({3, 1}, 1, 2) == 1);
    CHECK(fermat_quotient_order({3, 1}, 2, 2) == 0);
    CHECK(fermat_quotient_order({5, 1}, 3, 5) == 0);
    CHECK(fermat_quotient_order({5, 1}, 1, 0) == 0);
    CHECK_THROWS_AS(fermat_quotient_order({5, 1}, 0, 2), std::invalid_argument);
}

TEST_CASE("fermat_quotient_order reads the base-p digits of u^(p-1)") {
    for (std::uint64_t p : {3, 5, 7}) {
        const PrimePowerModulus m(p, 1);
        for (std::uint64_t u = 1; u < 200; ++u) {
            if (u % p == 0) continue;
            BigInt rest = (boost::multiprecision::pow(BigInt(u), static_cast<unsigned>(p - 1)) - 1) / p;
            for (unsigned i = 1; i <= 4; ++i) {
                REQUIRE(fermat_quotient_order(m, i, u) == rest % p);
                rest /= p;
            }
            REQUIRE(fermat_quotient_order(m, 1, u) == euler_quotient(m, u));
        }
    }
}

TEST_CASE("verify_congruence_qrs") {
    CHECK(verify_congruence_qrs({3, 2}, 1, 2));
    CHECK(verify_congruence_qrs({5, 3}, 2, 7));
    CHECK(verify_congruence_qrs({5, 3}, 1, 35));
    CHECK_THROWS_AS(verify_congruence_qrs({5, 3}, 3, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_congruence_qrs({5, 3}, 0, 7), std::invalid_argument);
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {5, 4}})
        CHECK(verify::check_qrs({p, r}));
}

TEST_CASE("shift law and least period of H") {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(r);
        CHECK(verify::check_theorem_hh({p, r}));
        CHECK(verify::check_hh_least_period({p, r}));
    }
}

TEST_CASE("shift law of F^(i)") {
    for (std::uint64_t p : {3, 5})
        for (unsigned i = 1; i <= 3; ++i) CHECK(verify::check_fermat_order_shift(p, i));
}

TEST_CASE("H_1 from the expansion of u^(p-1)") {
    for (std::uint64_t p : {5, 7, 11}) CHECK(verify::check_worked_example(p));

    // For p = 3 the binomial term C(3,3) p^3 A^3 of (1 + pA)^3 also reaches
    // the p^3 digit, so the closed form is off by c_1^3. u = 2: c_1 = 1, c_2 = 0, H_1 = 2.
    std::string detail;
    CHECK_FALSE(verify::check_worked_example(3, &detail));
    CHECK(detail == "u=2 c1=1 c2=0 H0=1 H1=2 formula=1");
    for (std::uint64_t u = 1; u < 27; ++u) {
        if (u % 3 == 0) continue;
        const auto rest = (u * u - 1) / 3;
        const auto c1 = rest % 3;
        const auto c2 = rest / 3 % 3;
        CHECK(new_quotient_h({3, 2}, u) == (c1 * c1 + c2 + c1 * c1 * c1) % 3);
    }
}
