// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulerq/complexity.hpp"
#include "eulerq/verify.hpp"

using namespace eulerq;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime ceilings in seconds; 0 means no ceiling.
constexpr double limit_lc = 5.0;
constexpr double limit_klc_full = 60.0;
constexpr double limit_klc_partial = 600.0;
constexpr double limit_hh = 5.0;
constexpr double limit_oracle = 30.0;

struct Outcome {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << what;
        }
    }
};

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::uint64_t> lcs_of(const ComplexityReport& report) {
    std::vector<std::uint64_t> out;
    for (const auto& e : report.kerror) out.push_back(e.lc);
    return out;
}

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0) o.expect(secs < limit, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    if (!o.ok) ++failures;
    std::printf("%s  %2d  %-44s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : "  ",
                o.why.str().c_str());
    std::fflush(stdout);
}

PeriodicSequence class_seq(std::uint64_t p, unsigned r, std::set<std::uint64_t> index) {
    return binary_class_sequence({p, r}, IndexSet(p, std::move(index)));
}

} // namespace

int main() {
    criterion(1, "LC of the highest-level sequence", limit_lc, [](Outcome& o) {
        const std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> cases{
            {3, 2, 11}, {3, 3, 29}, {5, 2, 29}, {7, 2, 55}};
        for (auto [p, r, want] : cases) {
            const PrimePowerModulus m(p, r);
            const auto s = level_sequence(m, r - 1);
            const PrimeField f(p);
            const auto bm = berlekamp_massey(s, f);
            const auto g = lc_via_gcd(s, f);
            const auto tag = "(" + std::to_string(p) + "," + std::to_string(r) + ")";
            o.expect(bm == want, tag + " BM " + std::to_string(bm));
            o.expect(g == want, tag + " gcd " + std::to_string(g));
            o.expect(want == ipow(p, r) + p - 1, tag + " formula");
        }
    });

    criterion(2, "k-error profile, p=3 r=2 I={0}", limit_klc_full, [](Outcome& o) {
        const std::vector<std::uint64_t> want{20, 20, 20, 19, 19, 19, 0, 0, 0};
        std::vector<std::uint64_t> predicted;
        for (std::uint64_t k = 0; k < want.size(); ++k) predicted.push_back(predicted_kerror_lc(3, 2, 1, k));
        o.expect(predicted == want, "predictor " + join(predicted));
        const auto brute = kerror_profile_bruteforce(class_seq(3, 2, {0}), want.size() - 1);
        o.expect(brute == want, "brute force " + join(brute));
    });

    criterion(3, "odd |I| at p=5 r=2 I={0}", limit_klc_partial, [](Outcome& o) {
        const PrimePowerModulus m(5, 2);
        const auto s = class_seq(5, 2, {0});
        o.expect(lc_binary(s) == 104, "LC_0 " + std::to_string(lc_binary(s)));

        const auto lambda = constructive_error_pattern(m, PatternKind::lambda);
        const auto lambda_lc = lc_binary(lambda.apply(s));
        o.expect(lambda.weight() == 5, "lambda weight " + std::to_string(lambda.weight()));
        o.expect(lambda_lc == 101, "lambda LC " + std::to_string(lambda_lc));
        o.expect(predicted_kerror_lc(5, 2, 1, 5) == 101, "predicted LC_5");

        const auto full = constructive_error_pattern(m, PatternKind::lambda_times_full);
        const auto full_lc = lc_binary(full.apply(s));
        o.expect(full.weight() == 20, "lambda_times_full weight " + std::to_string(full.weight()));
        o.expect(full_lc == 100, "lambda_times_full LC " + std::to_string(full_lc));

        const auto brute = kerror_profile_bruteforce(s, 2);
        o.expect(brute == std::vector<std::uint64_t>{104, 104, 104}, "brute force " + join(brute));
    });

    criterion(4, "even |I| at p=5 r=2 I={0,1}", 0, [](Outcome& o) {
        const auto s = class_seq(5, 2, {0, 1});
        const auto brute = kerror_profile_bruteforce(s, 2);
        o.expect(brute == std::vector<std::uint64_t>{100, 100, 100}, "brute force " + join(brute));
        o.expect(predicted_kerror_lc(5, 2, 2, 0) == 100, "predicted LC_0");
    });

    criterion(5, "shift law and least period of H", limit_hh, [](Outcome& o) {
        for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
            const auto tag = "(" + std::to_string(p) + "," + std::to_string(r) + ")";
            o.expect(verify::check_theorem_hh({p, r}), tag + " shift law");
            o.expect(verify::check_hh_least_period({p, r}), tag + " least period");
        }
    });

    criterion(6, "Q_r == Q_s mod p^s", 0, [](Outcome& o) {
        for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 3}, {3, 4}, {5, 3}})
            o.expect(verify::check_qrs({p, r}), "(" + std::to_string(p) + "," + std::to_string(r) + ")");
    });

    criterion(7, "root-group and polynomial lemmas", 0, [](Outcome& o) {
        for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {3, 3}})
            o.expect(check_root_group_lemmas({p, r}), "root group (" + std::to_string(p) + "," + std::to_string(r) + ")");
        for (std::uint64_t p : {3, 5, 11, 13}) o.expect(check_poly_p_lemma(p), "poly p=" + std::to_string(p));

        bool refused_poly = false;
        try {
            check_poly_p_lemma(7);
        } catch (const HypothesisError&) {
            refused_poly = true;
        }
        o.expect(refused_poly, "poly lemma accepted p=7");

        bool refused_klc = false;
        try {
            kerror_profile(class_seq(7, 2, {0}), {7, 2}, IndexSet(7, {0}), 1);
        } catch (const HypothesisError&) {
            refused_klc = true;
        }
        o.expect(refused_klc, "k-error closed form accepted p=7");
    });

    criterion(8, "Fermat quotients of order i", 0, [](Outcome& o) {
        for (std::uint64_t p : {3, 5}) {
            for (unsigned i = 1; i <= 3; ++i) {
                const auto s = order_i_sequence(p, i);
                const PrimeField f(p);
                const auto want = ipow(p, i) + p - 1;
                const auto bm = berlekamp_massey(s, f);
                const auto g = lc_via_gcd(s, f);
                const auto tag = "p=" + std::to_string(p) + " i=" + std::to_string(i);
                o.expect(bm == want && g == want, tag + " LC " + std::to_string(bm) + "/" + std::to_string(g));
            }
        }
        const auto f2 = order_i_binary_sequence(3, 2, IndexSet(3, {0}));
        const std::uint64_t k_max = f2.weight();
        const auto brute = kerror_profile_bruteforce(f2, k_max);
        std::vector<std::uint64_t> predicted;
        for (std::uint64_t k = 0; k <= k_max; ++k) predicted.push_back(predicted_kerror_lc(3, 2, 1, k));
        o.expect(brute == predicted, "brute " + join(brute) + " vs " + join(predicted));
    });

    criterion(9, "H_0 and H_1 from the expansion of u^(p-1)", 0, [](Outcome& o) {
        for (std::uint64_t p : {3, 5, 7}) {
            std::string detail;
            const bool ok = verify::check_worked_example(p, &detail);
            o.expect(ok, "p=" + std::to_string(p) + " " + detail);
        }
    });

    criterion(10, "Berlekamp-Massey agrees with the gcd formula", limit_oracle, [](Outcome& o) {
        std::mt19937_64 rng(20150601);
        int mismatches = 0;
        for (int n = 0; n < 500; ++n) {
            const std::uint64_t q = n % 2 == 0 ? 2 : 3;
            const std::size_t period = 1 + rng() % 200;
            std::vector<std::uint32_t> symbols(period);
            for (auto& x : symbols) x = static_cast<std::uint32_t>(rng() % q);
            const PeriodicSequence s(q, std::move(symbols));
            const PrimeField f(q);
            if (berlekamp_massey(s, f) != lc_via_gcd(s, f)) ++mismatches;
        }
        o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
