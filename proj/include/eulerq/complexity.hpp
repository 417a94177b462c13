#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerq/field_arith.hpp"
#include "eulerq/sequences.hpp"

namespace eulerq {

enum class Method { berlekamp_massey, gcd_formula, brute_force, constructive_bound };

std::string_view to_string(Method m) noexcept;

struct KErrorEntry {
    std::uint64_t k = 0;
    std::uint64_t lc = 0;
    /// True when lc is the exact minimum; otherwise lc is an upper bound.
    bool exact = false;
    /// Closed-form value where one applies (not serialised).
    std::optional<std::uint64_t> predicted;
};

struct ComplexityReport {
    SequenceTag sequence;
    std::uint64_t lc = 0;
    Method method = Method::berlekamp_massey;
    std::vector<KErrorEntry> kerror;
    /// Human-readable remarks: bound provenance, disagreements with the closed form.
    std::vector<std::string> notes;
};

/// A set of positions in one period at which a binary sequence is flipped.
struct ErrorPattern {
    std::size_t period = 0;
    std::vector<std::uint64_t> positions;

    std::size_t weight() const noexcept { return positions.size(); }
    /// Throws std::invalid_argument if seq is not binary or periods differ.
    PeriodicSequence apply(const PeriodicSequence& seq) const;
};

/// Raised when a closed-form result is requested outside its hypotheses.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an exhaustive search would exceed its pattern budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Linear complexity of the periodic extension. Runs over two periods.
/// Throws std::invalid_argument if the alphabet is not the field's.
std::uint64_t berlekamp_massey(const PeriodicSequence& s, const PrimeField& field);

/// T - deg gcd(X^T - 1, S(X)); 0 for the zero sequence.
std::uint64_t lc_via_gcd(const PeriodicSequence& s, const PrimeField& field);

/// lc_via_gcd over F_2 on bit-packed polynomials.
std::uint64_t lc_binary(const PeriodicSequence& s);

/// Sum of C(period, w) for w <= k, saturating at UINT64_MAX.
std::uint64_t pattern_count(std::uint64_t period, std::uint64_t k);

/// Largest k <= k_max whose pattern count fits the budget.
std::uint64_t max_feasible_k(std::uint64_t period, std::uint64_t k_max, std::uint64_t budget);

/// Exact LC_0, ..., LC_{k_max} of a binary sequence by exhaustive search.
/// Throws BudgetExceeded if pattern_count(period, k_max) > options.budget.
std::vector<std::uint64_t> kerror_profile_bruteforce(const PeriodicSequence& s, std::uint64_t k_max,
                                                     const SearchOptions& options = {});

std::uint64_t kerror_lc_bruteforce(const PeriodicSequence& s, std::uint64_t k, const SearchOptions& options = {});

enum class PatternKind { lambda, lambda_times_full };

/// Error patterns e(X) = Lambda(X) and (X + ... + X^(p-1)) Lambda(X), read
/// modulo X^(p^(r+1)) - 1. Throws std::invalid_argument if r < 2.
ErrorPattern constructive_error_pattern(const PrimePowerModulus& m, PatternKind kind);

/// Closed-form LC_k of the p^(level+1)-periodic class sequence built from a
/// set of index_size classes, assuming 2 is a primitive root mod p^2.
std::uint64_t predicted_kerror_lc(std::uint64_t p, unsigned level, std::size_t index_size, std::uint64_t k);

/// Throws HypothesisError unless 2 is a primitive root mod p^2 and 1 <= |I| <= (p-1)/2.
void require_klc_hypotheses(std::uint64_t p, const IndexSet& index_set);

/// k-error profile for k = 0..k_max of a class sequence (binary_class_sequence,
/// or order_i_binary_sequence with m = (p, i)). Entries inside the search
/// budget are exact; the rest carry the best constructive upper bound.
ComplexityReport kerror_profile(const PeriodicSequence& s, const PrimePowerModulus& m, const IndexSet& index_set,
                                std::uint64_t k_max, const SearchOptions& options = {});

/// Linear complexity over F_{alphabet}, plus an exhaustive k-error profile
/// for binary input when k_max > 0. Entries past the budget are monotone
/// upper bounds marked inexact.
ComplexityReport analyze_sequence(const PeriodicSequence& s, std::uint64_t k_max, const SearchOptions& options = {});

/// Over F_2, for every class D_l: Lambda_r(X) | D_l(X) mod X^(p^r) - 1,
/// D_l(X) == 1 mod (X^p - 1)/(X - 1), and D_l(1) = 0.
/// Throws std::invalid_argument if r < 2.
bool check_root_group_lemmas(const PrimePowerModulus& m);

/// Minimal polynomial over F_2 of a primitive p-th root of unity theta: an
/// irreducible factor of (X^p - 1)/(X - 1) of degree ord_p(2). p <= 23.
Polynomial root_minimal_polynomial(std::uint64_t p);

/// Every G over F_2 with 1 <= deg G < p and G(theta) = 1, by exhaustive search.
std::vector<Polynomial> poly_p_lemma_solutions(std::uint64_t p);

/// The unique such G is X + X^2 + ... + X^(p-1). Throws HypothesisError
/// unless 2 is a primitive root mod p.
bool check_poly_p_lemma(std::uint64_t p);

} // namespace eulerq
