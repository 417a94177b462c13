#include "eulerq/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace eulerq::verify {

namespace {

std::uint64_t pow_mod_small(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1U) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

CheckResult make(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<CheckResult> suite_klc(const SuiteConfig& cfg) {
    const PrimePowerModulus m(cfg.p, cfg.r);
    const IndexSet index_set(cfg.p, cfg.index_set);
    require_klc_hypotheses(cfg.p, index_set);

    std::vector<CheckResult> out;
    const auto seq = binary_class_sequence(m, index_set);
    const auto k_max = cfg.k_max == 0 ? seq.weight() : cfg.k_max;
    const auto report = kerror_profile(seq, m, index_set, k_max, cfg.search);

    std::vector<std::uint64_t> got;
    std::vector<std::uint64_t> want;
    std::uint64_t exact_up_to = 0;
    bool exact_ok = true;
    for (const auto& e : report.kerror) {
        if (!e.exact) continue;
        exact_up_to = e.k;
        got.push_back(e.lc);
        want.push_back(*e.predicted);
        exact_ok = exact_ok && e.lc == *e.predicted;
    }
    out.push_back(make("exhaustive profile k<=" + std::to_string(exact_up_to) + " matches closed form", exact_ok,
                       "search [" + join(got) + "] closed form [" + join(want) + "]"));

    bool bound_ok = true;
    for (const auto& e : report.kerror) {
        if (!e.exact) bound_ok = bound_ok && e.lc == *e.predicted;
    }
    if (report.kerror.back().exact) {
        out.push_back({"constructive bounds beyond search range", Status::skip, "search covered every k"});
    } else {
        out.push_back(make("constructive bounds beyond search range equal closed form", bound_ok));
    }

    if (m.r() >= 2 && index_set.size() % 2 == 1) {
        const auto lam = constructive_error_pattern(m, PatternKind::lambda);
        const auto full = constructive_error_pattern(m, PatternKind::lambda_times_full);
        const auto lc_lam = lc_binary(lam.apply(seq));
        const auto lc_full = lc_binary(full.apply(seq));
        const auto n = m.sequence_period();
        const auto top = n - n / m.p();
        out.push_back(make("lambda pattern (weight " + std::to_string(lam.weight()) + ") gives p^(r+1)-p^r+1",
                           lc_lam == top + 1, "lc " + std::to_string(lc_lam)));
        out.push_back(make("lambda*G pattern (weight " + std::to_string(full.weight()) + ") gives p^(r+1)-p^r",
                           lc_full == top, "lc " + std::to_string(lc_full)));
    }
    return out;
}

std::vector<CheckResult> suite_oracles(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::size_t mismatches = 0;
    for (std::size_t n = 0; n < cfg.samples; ++n) {
        const std::uint64_t q = (n % 2 == 0) ? 2 : 3;
        const auto period = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
        std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(q - 1));
        std::vector<std::uint32_t> s(period);
        for (auto& x : s) x = sym(rng);
        const PeriodicSequence seq(q, std::move(s));
        const PrimeField f(q);
        if (berlekamp_massey(seq, f) != lc_via_gcd(seq, f)) ++mismatches;
    }
    return {make("Berlekamp-Massey equals gcd formula on " + std::to_string(cfg.samples) + " random sequences",
                 mismatches == 0, std::to_string(mismatches) + " mismatches, seed " + std::to_string(cfg.seed))};
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem-hh", "hh-period", "qrs",       "lc-p",    "worked-example",
                                                "fermat-order", "partition", "lemmas", "klc", "oracles"};
    return names;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const auto& c) { return c.status == Status::fail; });
}

bool check_theorem_hh(const PrimePowerModulus& m) {
    const std::uint64_t p = m.p();
    const auto pr = static_cast<std::uint64_t>(m.modulus());
    for (std::uint64_t v = 1; v < pr; ++v) {
        if (v % p == 0) continue;
        const auto base = new_quotient_h(m, v);
        const auto inv_term = pow_mod_small(v, p - 2, p);
        for (std::uint64_t k = 0; k < p; ++k) {
            const auto expected = (base + p * p - k * inv_term % p) % p;
            if (new_quotient_h(m, v + k * pr) != expected) return false;
        }
    }
    return true;
}

bool check_hh_least_period(const PrimePowerModulus& m) {
    const auto n = m.sequence_period();
    const auto shorter = n / m.p();
    bool repeats = true;
    bool repeats_shorter = true;
    for (std::uint64_t u = 0; u < n; ++u) {
        const auto h = new_quotient_h(m, u);
        repeats = repeats && new_quotient_h(m, u + n) == h;
        repeats_shorter = repeats_shorter && new_quotient_h(m, u + shorter) == h;
    }
    // Every divisor of p^(r+1) below it divides p^r, so ruling out p^r rules out all.
    return repeats && !repeats_shorter;
}

bool check_qrs(const PrimePowerModulus& m) {
    const auto n = m.sequence_period();
    for (unsigned s = 1; s < m.r(); ++s) {
        for (std::uint64_t u = 0; u < n; ++u) {
            if (!verify_congruence_qrs(m, s, u)) return false;
        }
    }
    return true;
}

bool check_fermat_order_shift(std::uint64_t p, unsigned order) {
    const PrimePowerModulus m(p, order);
    const auto pi = static_cast<std::uint64_t>(m.modulus());
    for (std::uint64_t v = 1; v < pi; ++v) {
        if (v % p == 0) continue;
        const auto base = fermat_quotient_order(m, order, v);
        const auto inv_term = pow_mod_small(v, p - 2, p);
        for (std::uint64_t k = 0; k < p; ++k) {
            const auto expected = (base + p * p - k * inv_term % p) % p;
            if (fermat_quotient_order(m, order, v + k * pi) != expected) return false;
        }
    }
    return true;
}

bool check_worked_example(std::uint64_t p, std::string* detail) {
    const PrimePowerModulus m1(p, 1);
    const PrimePowerModulus m2(p, 2);
    const std::uint64_t n = p * p * p;
    for (std::uint64_t u = 1; u < n; ++u) {
        if (u % p == 0) continue;
        BigInt rest = (boost::multiprecision::pow(BigInt(u), static_cast<unsigned>(p - 1)) - 1) / p;
        const auto c1 = static_cast<std::uint64_t>(rest % p);
        rest /= p;
        const auto c2 = static_cast<std::uint64_t>(rest % p);
        const auto h0 = new_quotient_h(m1, u);
        const auto h1 = new_quotient_h(m2, u);
        const auto expected = ((p - 1) / 2 * c1 % p * c1 + c2) % p;
        if (h0 != c1 || h1 != expected) {
            if (detail)
                *detail = "u=" + std::to_string(u) + " c1=" + std::to_string(c1) + " c2=" + std::to_string(c2) +
                          " H0=" + std::to_string(h0) + " H1=" + std::to_string(h1) + " formula=" +
                          std::to_string(expected);
            return false;
        }
    }
    return true;
}

bool check_partition(const PrimePowerModulus& m, std::string* detail) {
    const auto part = class_partition(m);
    const std::uint64_t p = m.p();
    const auto n = m.sequence_period();
    const auto class_size = n / p / p * (p - 1);
    auto fail = [&](std::string why) {
        if (detail) *detail = std::move(why);
        return false;
    };

    if (part.multiples.size() != n / p) return fail("|P| = " + std::to_string(part.multiples.size()));
    std::vector<int> seen(n, 0);
    for (auto u : part.multiples) ++seen[u];
    for (std::uint64_t l = 0; l < p; ++l) {
        const auto& cls = part.classes[l];
        if (cls.size() != class_size)
            return fail("|D_" + std::to_string(l) + "| = " + std::to_string(cls.size()) + ", expected " +
                        std::to_string(class_size));
        if (class_by_lifting(m, l) != cls) return fail("lifting form differs for D_" + std::to_string(l));
        for (auto u : cls) {
            ++seen[u];
            if (new_quotient_h(m, u) != l) return fail("membership of " + std::to_string(u));
        }
        std::uint64_t pj = 1;
        for (unsigned j = 1; j <= m.r(); ++j) {
            pj *= p;
            std::map<std::uint64_t, std::uint64_t> fibre;
            for (auto u : cls) ++fibre[u % pj];
            const auto units = pj / p * (p - 1);
            const auto expected = ipow(p, m.r() - j);
            if (fibre.size() != units) return fail("D_" + std::to_string(l) + " mod p^" + std::to_string(j) + " is not onto");
            for (auto [residue, count] : fibre) {
                if (residue % p == 0 || count != expected)
                    return fail("fibre of " + std::to_string(residue) + " mod p^" + std::to_string(j) + " has size " +
                                std::to_string(count));
            }
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return fail("not a partition");
    return true;
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteConfig& cfg) {
    const PrimePowerModulus m(cfg.p, cfg.r);
    const std::string tag = " (p=" + std::to_string(cfg.p) + ", r=" + std::to_string(cfg.r) + ")";

    if (name == "theorem-hh") return {make("shift law H(v + k p^r) = H(v) - k v^(p-2)" + tag, check_theorem_hh(m))};
    if (name == "hh-period") return {make("least period of H_{r-1} is p^(r+1)" + tag, check_hh_least_period(m))};
    if (name == "qrs") {
        if (cfg.r < 2) return {{"Q_r = Q_s mod p^s" + tag, Status::skip, "needs r >= 2"}};
        return {make("Q_r = Q_s mod p^s for 0 < s < r" + tag, check_qrs(m))};
    }
    if (name == "lc-p") {
        const auto seq = level_sequence(m, cfg.r - 1);
        const PrimeField f(cfg.p);
        const auto bm = berlekamp_massey(seq, f);
        const auto gcd = lc_via_gcd(seq, f);
        const auto want = static_cast<std::uint64_t>(m.modulus()) + cfg.p - 1;
        return {make("LC of H_{r-1} over F_p is p^r + p - 1" + tag, bm == want && gcd == want,
                     "bm " + std::to_string(bm) + ", gcd " + std::to_string(gcd) + ", expected " + std::to_string(want))};
    }
    if (name == "worked-example") {
        std::string detail;
        const bool ok = check_worked_example(cfg.p, &detail);
        return {make("H_0 = c_1 and H_1 = (p-1)/2 c_1^2 + c_2" + tag, ok, detail)};
    }
    if (name == "fermat-order") {
        std::vector<CheckResult> out;
        const PrimeField f(cfg.p);
        for (unsigned i = 1; i <= cfg.r; ++i) {
            const auto seq = order_i_sequence(cfg.p, i);
            const auto lc = berlekamp_massey(seq, f);
            const auto want = ipow(cfg.p, i) + cfg.p - 1;
            out.push_back(make("LC of F^(" + std::to_string(i) + ") is p^i + p - 1", lc == want && lc_via_gcd(seq, f) == want,
                               "lc " + std::to_string(lc) + ", expected " + std::to_string(want)));
            out.push_back(make("shift law of F^(" + std::to_string(i) + ")", check_fermat_order_shift(cfg.p, i)));
        }
        return out;
    }
    if (name == "partition") {
        std::string detail;
        const bool ok = check_partition(m, &detail);
        return {make("class partition invariants" + tag, ok, detail)};
    }
    if (name == "lemmas") {
        std::vector<CheckResult> out;
        if (cfg.r >= 2) {
            out.push_back(make("root-group divisibility lemmas" + tag, check_root_group_lemmas(m)));
        } else {
            out.push_back({"root-group divisibility lemmas" + tag, Status::skip, "needs r >= 2"});
        }
        try {
            out.push_back(make("G = X + ... + X^(p-1) is the unique G with G(theta) = 1", check_poly_p_lemma(cfg.p)));
        } catch (const HypothesisError& e) {
            out.push_back({"G = X + ... + X^(p-1) is the unique G with G(theta) = 1", Status::skip, e.what()});
        }
        return out;
    }
    if (name == "klc") return suite_klc(cfg);
    if (name == "oracles") return suite_oracles(cfg);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace eulerq::verify
