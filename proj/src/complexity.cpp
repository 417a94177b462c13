#include "eulerq/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace eulerq {

std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::berlekamp_massey: return "berlekamp_massey";
    case Method::gcd_formula: return "gcd_formula";
    case Method::brute_force: return "brute_force";
    case Method::constructive_bound: return "constructive_bound";
    }
    return "unknown";
}

PeriodicSequence ErrorPattern::apply(const PeriodicSequence& seq) const {
    if (seq.alphabet_size() != 2) throw std::invalid_argument("error patterns apply to binary sequences only");
    if (seq.period() != period) throw std::invalid_argument("error pattern period does not match the sequence");
    auto bits = seq.symbols();
    for (auto pos : positions) bits[pos] ^= 1U;
    return PeriodicSequence(2, std::move(bits), seq.tag());
}

namespace {

void require_alphabet(const PeriodicSequence& s, const PrimeField& field) {
    if (s.alphabet_size() != field.p())
        throw std::invalid_argument("alphabet of size " + std::to_string(s.alphabet_size()) +
                                    " does not match F_" + std::to_string(field.p()));
}

gf2::BitPoly to_bitpoly(const PeriodicSequence& s) {
    gf2::BitPoly poly(s.period());
    for (std::size_t i = 0; i < s.period(); ++i) {
        if (s.symbols()[i] != 0) poly.flip(i);
    }
    return poly;
}

std::uint64_t lc_of(const gf2::BitPoly& generating, const gf2::BitPoly& modulus, std::size_t period) {
    if (generating.is_zero()) return 0;
    return period - static_cast<std::uint64_t>(gf2::gcd_degree(modulus, generating));
}

/// Minimum LC over all patterns of exactly `weight` flips, split into chunks
/// by leading flip position and combined by minimum.
std::uint64_t min_lc_at_weight(const gf2::BitPoly& base, const gf2::BitPoly& modulus, std::size_t period,
                               std::size_t weight, unsigned threads) {
    if (weight == 0) return lc_of(base, modulus, period);
    if (weight > period) return std::numeric_limits<std::uint64_t>::max();

    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    const std::size_t chunks = period - weight + 1;

    auto worker = [&] {
        std::vector<std::size_t> idx(weight);
        for (std::size_t lead = next_chunk++; lead < chunks; lead = next_chunk++) {
            if (best.load(std::memory_order_relaxed) == 0) return;
            gf2::BitPoly poly = base;
            poly.flip(lead);
            idx[0] = lead;
            for (std::size_t j = 1; j < weight; ++j) {
                idx[j] = lead + j;
                poly.flip(idx[j]);
            }
            std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
            while (true) {
                local = std::min(local, lc_of(poly, modulus, period));
                if (local == 0) break;
                // advance the tail combination idx[1..weight-1] over (lead, period)
                std::size_t j = weight;
                while (j-- > 1) {
                    if (idx[j] < period - (weight - j)) break;
                }
                if (j == 0) break;
                poly.flip(idx[j]);
                ++idx[j];
                poly.flip(idx[j]);
                for (std::size_t t = j + 1; t < weight; ++t) {
                    poly.flip(idx[t]);
                    idx[t] = idx[t - 1] + 1;
                    poly.flip(idx[t]);
                }
            }
            std::uint64_t cur = best.load();
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        }
    };

    const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    return best.load();
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace

std::uint64_t berlekamp_massey(const PeriodicSequence& s, const PrimeField& field) {
    require_alphabet(s, field);
    const std::size_t n = 2 * s.period();
    std::vector<std::uint64_t> conn{1};
    std::vector<std::uint64_t> prev{1};
    std::uint64_t length = 0;
    std::uint64_t last_discrepancy = 1;
    std::size_t shift = 1;

    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t d = s.at(i);
        for (std::size_t j = 1; j <= length; ++j) d = field.add(d, field.mul(conn[j], s.at(i - j)));
        if (d == 0) {
            ++shift;
            continue;
        }
        const std::uint64_t coef = field.mul(d, field.inv(last_discrepancy));
        auto updated = conn;
        if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift, 0);
        for (std::size_t j = 0; j < prev.size(); ++j)
            updated[j + shift] = field.sub(updated[j + shift], field.mul(coef, prev[j]));
        if (2 * length <= i) {
            prev = std::move(conn);
            length = i + 1 - length;
            last_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
        conn = std::move(updated);
    }
    return length;
}

std::uint64_t lc_via_gcd(const PeriodicSequence& s, const PrimeField& field) {
    require_alphabet(s, field);
    std::vector<std::uint64_t> coeffs(s.symbols().begin(), s.symbols().end());
    const Polynomial generating(field, std::move(coeffs));
    if (generating.is_zero()) return 0;
    const auto g = poly_gcd(Polynomial::x_pow_minus_one(field, s.period()), generating);
    return s.period() - static_cast<std::uint64_t>(g.degree());
}

std::uint64_t lc_binary(const PeriodicSequence& s) {
    if (s.alphabet_size() != 2) throw std::invalid_argument("lc_binary: sequence is not binary");
    return lc_of(to_bitpoly(s), gf2::BitPoly::x_pow_minus_one(s.period()), s.period());
}

std::uint64_t pattern_count(std::uint64_t period, std::uint64_t k) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (std::uint64_t w = 0; w <= std::min(k, period); ++w) {
        if (w > 0) {
            // binom = C(period, w) = C(period, w-1) * (period - w + 1) / w
            const auto num = static_cast<unsigned __int128>(binom) * (period - w + 1) / w;
            if (num > cap) return cap;
            binom = static_cast<std::uint64_t>(num);
        }
        if (total > cap - binom) return cap;
        total += binom;
    }
    return total;
}

std::uint64_t max_feasible_k(std::uint64_t period, std::uint64_t k_max, std::uint64_t budget) {
    std::uint64_t k = 0;
    while (k < k_max && pattern_count(period, k + 1) <= budget) ++k;
    return k;
}

std::vector<std::uint64_t> kerror_profile_bruteforce(const PeriodicSequence& s, std::uint64_t k_max,
                                                     const SearchOptions& options) {
    if (s.alphabet_size() != 2) throw std::invalid_argument("k-error search requires a binary sequence");
    if (k_max > s.period()) throw std::invalid_argument("k exceeds the period");
    const auto needed = pattern_count(s.period(), k_max);
    if (needed > options.budget)
        throw BudgetExceeded("k-error search up to k = " + std::to_string(k_max) + " needs " +
                             std::to_string(needed) + " patterns, budget is " + std::to_string(options.budget));

    const auto base = to_bitpoly(s);
    const auto modulus = gf2::BitPoly::x_pow_minus_one(s.period());
    const unsigned threads = resolve_threads(options.threads);
    std::vector<std::uint64_t> profile;
    profile.reserve(k_max + 1);
    for (std::uint64_t w = 0; w <= k_max; ++w) {
        if (!profile.empty() && profile.back() == 0) {
            profile.push_back(0);
            continue;
        }
        const auto at_w = min_lc_at_weight(base, modulus, s.period(), w, threads);
        profile.push_back(profile.empty() ? at_w : std::min(profile.back(), at_w));
    }
    return profile;
}

std::uint64_t kerror_lc_bruteforce(const PeriodicSequence& s, std::uint64_t k, const SearchOptions& options) {
    return kerror_profile_bruteforce(s, k, options).back();
}

ErrorPattern constructive_error_pattern(const PrimePowerModulus& m, PatternKind kind) {
    if (m.r() < 2) throw std::invalid_argument("constructive error patterns need r >= 2");
    const std::uint64_t p = m.p();
    const std::uint64_t blocks = ipow(p, m.r() - 1);
    ErrorPattern out{m.sequence_period(), {}};
    for (std::uint64_t b = 0; b < blocks; ++b) {
        if (kind == PatternKind::lambda) {
            out.positions.push_back(b * p);
        } else {
            for (std::uint64_t a = 1; a < p; ++a) out.positions.push_back(a + b * p);
        }
    }
    return out;
}

std::uint64_t predicted_kerror_lc(std::uint64_t p, unsigned level, std::size_t index_size, std::uint64_t k) {
    const std::uint64_t lower_power = ipow(p, level - 1);
    const std::uint64_t top = lower_power * p * p - lower_power * p; // p^(n+1) - p^n
    const std::uint64_t weight = lower_power * (p - 1) * index_size;
    if (k >= weight) return 0;
    if (index_size % 2 == 0) return top;
    if (k < lower_power) return top + p - 1;
    if (k < lower_power * (p - 1)) return top + 1;
    return top;
}

void require_klc_hypotheses(std::uint64_t p, const IndexSet& index_set) {
    const std::uint64_t p2 = p * p;
    const auto order = multiplicative_order(2, p2);
    if (order != p * (p - 1))
        throw HypothesisError("2 is not a primitive root modulo " + std::to_string(p2) + " (its order is " +
                              std::to_string(order) + ", not " + std::to_string(p * (p - 1)) + ")");
    if (!index_set.within_theorem_bound())
        throw HypothesisError("index set size " + std::to_string(index_set.size()) + " is outside [1, " +
                              std::to_string((p - 1) / 2) + "]");
}

ComplexityReport kerror_profile(const PeriodicSequence& s, const PrimePowerModulus& m, const IndexSet& index_set,
                                std::uint64_t k_max, const SearchOptions& options) {
    require_klc_hypotheses(m.p(), index_set);
    if (s.alphabet_size() != 2 || s.period() != m.sequence_period())
        throw std::invalid_argument("kerror_profile expects a binary sequence of period p^(r+1)");

    ComplexityReport report;
    report.sequence = s.tag();
    report.lc = lc_binary(s);
    k_max = std::min<std::uint64_t>(k_max, s.period());

    const auto feasible = max_feasible_k(s.period(), k_max, options.budget);
    const auto exact = kerror_profile_bruteforce(s, feasible, options);

    // Constructive bounds: value reached by each explicit pattern and the
    // smallest k from which it is available.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bounds{{s.weight(), 0}};
    if (m.r() >= 2) {
        for (auto kind : {PatternKind::lambda, PatternKind::lambda_times_full}) {
            const auto pattern = constructive_error_pattern(m, kind);
            bounds.emplace_back(pattern.weight(), lc_binary(pattern.apply(s)));
        }
    }

    bool all_exact = true;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        KErrorEntry entry{k, 0, k <= feasible, predicted_kerror_lc(m.p(), m.r(), index_set.size(), k)};
        if (entry.exact) {
            entry.lc = exact[k];
        } else {
            all_exact = false;
            entry.lc = exact.back();
            for (auto [from, value] : bounds) {
                if (k >= from) entry.lc = std::min(entry.lc, value);
            }
        }
        if (entry.lc != *entry.predicted) {
            report.notes.push_back("k=" + std::to_string(k) + ": " + (entry.exact ? "exact value " : "bound ") +
                                   std::to_string(entry.lc) + " differs from closed form " +
                                   std::to_string(*entry.predicted));
        }
        report.kerror.push_back(entry);
    }
    if (!all_exact)
        report.notes.push_back("exhaustive search covers k <= " + std::to_string(feasible) +
                               "; larger k use the best of monotonicity and explicit error patterns");
    report.method = all_exact ? Method::brute_force : Method::constructive_bound;
    return report;
}

ComplexityReport analyze_sequence(const PeriodicSequence& s, std::uint64_t k_max, const SearchOptions& options) {
    if (!is_prime(s.alphabet_size()))
        throw std::invalid_argument("linear complexity needs a prime alphabet size, got " +
                                    std::to_string(s.alphabet_size()));
    const PrimeField field(s.alphabet_size());
    ComplexityReport report;
    report.sequence = s.tag();
    report.lc = berlekamp_massey(s, field);
    report.method = Method::berlekamp_massey;
    if (const auto check = lc_via_gcd(s, field); check != report.lc)
        throw std::logic_error("Berlekamp-Massey (" + std::to_string(report.lc) + ") and gcd formula (" +
                               std::to_string(check) + ") disagree");
    if (k_max == 0) return report;
    if (s.alphabet_size() != 2) throw std::invalid_argument("k-error linear complexity is defined here for binary sequences only");

    k_max = std::min<std::uint64_t>(k_max, s.period());
    const auto feasible = max_feasible_k(s.period(), k_max, options.budget);
    const auto exact = kerror_profile_bruteforce(s, feasible, options);
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (k <= feasible) {
            report.kerror.push_back({k, exact[k], true, std::nullopt});
        } else {
            report.kerror.push_back({k, k >= s.weight() ? 0 : exact.back(), false, std::nullopt});
        }
    }
    report.method = feasible == k_max ? Method::brute_force : Method::constructive_bound;
    if (feasible < k_max)
        report.notes.push_back("budget exceeded: exhaustive search covers k <= " + std::to_string(feasible));
    return report;
}

bool check_root_group_lemmas(const PrimePowerModulus& m) {
    if (m.r() < 2) throw std::invalid_argument("root-group lemmas need r >= 2");
    const PrimeField f2(2);
    const std::uint64_t p = m.p();
    const auto pr = static_cast<std::uint64_t>(m.modulus());
    const auto x_pr = Polynomial::x_pow_minus_one(f2, pr);
    const auto lambda = poly_divrem(x_pr, Polynomial::x_pow_minus_one(f2, p)).first;
    const auto cyclotomic = poly_divrem(Polynomial::x_pow_minus_one(f2, p), Polynomial::x_pow_minus_one(f2, 1)).first;
    const Polynomial one(f2, {1});

    const auto partition = class_partition(m);
    for (const auto& cls : partition.classes) {
        const auto d = Polynomial::from_exponents(f2, cls);
        if (!divides(lambda, poly_mod(d, x_pr))) return false;
        if (!(poly_mod(d, cyclotomic) == one)) return false;
        if (d.evaluate(1) != 0) return false;
    }
    return true;
}

Polynomial root_minimal_polynomial(std::uint64_t p) {
    if (p < 3 || !is_prime(p) || p > 23) throw std::invalid_argument("supported for odd primes p <= 23");
    const PrimeField f2(2);
    const auto cyclotomic = poly_divrem(Polynomial::x_pow_minus_one(f2, p), Polynomial::x_pow_minus_one(f2, 1)).first;
    const auto degree = multiplicative_order(2, p);
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << degree); ++low) {
        std::vector<std::uint64_t> c(degree + 1);
        for (std::uint64_t i = 0; i < degree; ++i) c[i] = (low >> i) & 1U;
        c[degree] = 1;
        Polynomial candidate(f2, std::move(c));
        if (divides(candidate, cyclotomic)) return candidate;
    }
    throw std::logic_error("no factor of the expected degree");
}

std::vector<Polynomial> poly_p_lemma_solutions(std::uint64_t p) {
    const PrimeField f2(2);
    const auto minimal = root_minimal_polynomial(p);
    const Polynomial one(f2, {1});
    std::vector<Polynomial> out;
    for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << p); ++mask) {
        std::vector<std::uint64_t> c(p);
        for (std::uint64_t i = 0; i < p; ++i) c[i] = (mask >> i) & 1U;
        Polynomial g(f2, std::move(c));
        if (divides(minimal, g - one)) out.push_back(std::move(g));
    }
    return out;
}

bool check_poly_p_lemma(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    const auto order = multiplicative_order(2, p);
    if (order != p - 1)
        throw HypothesisError("2 is not a primitive root modulo " + std::to_string(p) + " (its order is " +
                              std::to_string(order) + ")");
    const PrimeField f2(2);
    std::vector<std::uint64_t> c(p, 1);
    c[0] = 0;
    const Polynomial expected(f2, std::move(c));
    if (p <= 13) {
        const auto found = poly_p_lemma_solutions(p);
        return found.size() == 1 && found.front() == expected;
    }
    const auto cyclotomic = poly_divrem(Polynomial::x_pow_minus_one(f2, p), Polynomial::x_pow_minus_one(f2, 1)).first;
    return poly_mod(expected - Polynomial(f2, {1}), cyclotomic).is_zero();
}

} // namespace eulerq
