#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eulerq/complexity.hpp"

namespace eulerq::verify {

enum class Status { pass, fail, skip };

struct CheckResult {
    std::string name;
    Status status = Status::fail;
    std::string detail;
};

struct SuiteConfig {
    std::uint64_t p = 3;
    unsigned r = 2;
    std::set<std::uint64_t> index_set{0};
    /// k-error suites search up to this k; 0 means "up to the sequence weight".
    std::uint64_t k_max = 0;
    std::uint64_t seed = 20150601;
    std::size_t samples = 500;
    SearchOptions search;
};

/// theorem-hh, hh-period, qrs, lc-p, worked-example, fermat-order, partition,
/// lemmas, klc, oracles.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or invalid parameters and
/// HypothesisError when the suite's standing hypothesis fails for (p, r).
std::vector<CheckResult> run_suite(std::string_view name, const SuiteConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

// Individual checks, shared with the tests.

/// H_{r-1}(v + k p^r) == H_{r-1}(v) - k v^(p-2) (mod p) for all v < p^r coprime to p, k < p.
bool check_theorem_hh(const PrimePowerModulus& m);

/// (H_{r-1}(u)) repeats with period p^(r+1) and not with period p^r.
bool check_hh_least_period(const PrimePowerModulus& m);

/// Q_r == Q_s (mod p^s) for all u < p^(r+1), 0 < s < r.
bool check_qrs(const PrimePowerModulus& m);

/// F^{(i)}(v + k p^i) == F^{(i)}(v) - k v^(p-2) (mod p) for v < p^i coprime to p, k < p.
bool check_fermat_order_shift(std::uint64_t p, unsigned order);

/// H_0 = c_1 and H_1 == (p-1)/2 c_1^2 + c_2 (mod p) for all u < p^3 coprime to p,
/// with c_1, c_2 read off the exact integer u^(p-1).
bool check_worked_example(std::uint64_t p, std::string* detail = nullptr);

/// Cardinalities, coverage, lifting form, and the reduction fibres of each D_l.
bool check_partition(const PrimePowerModulus& m, std::string* detail = nullptr);

} // namespace eulerq::verify
