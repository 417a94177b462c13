#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eulerq/quotients.hpp"

namespace eulerq {

/// Where a sequence came from. r holds the order i for order-i sequences.
struct SequenceTag {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::string kind = "custom";
    std::vector<std::uint64_t> index_set;

    friend bool operator==(const SequenceTag&, const SequenceTag&) = default;
};

/// One period of a periodic sequence over {0, ..., alphabet_size - 1}.
class PeriodicSequence {
public:
    /// Throws std::invalid_argument if alphabet_size < 2, the period is empty,
    /// or a symbol is out of range.
    PeriodicSequence(std::uint64_t alphabet_size, std::vector<std::uint32_t> symbols, SequenceTag tag = {});

    std::uint64_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t period() const noexcept { return symbols_.size(); }
    const std::vector<std::uint32_t>& symbols() const noexcept { return symbols_; }
    const SequenceTag& tag() const noexcept { return tag_; }
    /// Symbol at any u >= 0 of the periodic extension.
    std::uint32_t at(std::uint64_t u) const noexcept { return symbols_[u % symbols_.size()]; }

    /// Number of nonzero symbols in one period.
    std::size_t weight() const noexcept;
    /// Least t dividing period() with s(u + t) = s(u) for all u.
    std::size_t least_period() const;

    friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

private:
    std::uint64_t alphabet_size_;
    std::vector<std::uint32_t> symbols_;
    SequenceTag tag_;
};

/// A non-empty subset of {0, ..., p-1}.
class IndexSet {
public:
    /// Throws std::invalid_argument if empty or any member >= p.
    IndexSet(std::uint64_t p, std::set<std::uint64_t> members);

    const std::set<std::uint64_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::uint64_t l) const { return members_.contains(l); }
    std::vector<std::uint64_t> to_vector() const { return {members_.begin(), members_.end()}; }
    /// 1 <= |I| <= (p-1)/2, the range the k-error results are stated for.
    bool within_theorem_bound() const noexcept { return size() >= 1 && size() <= (p_ - 1) / 2; }

private:
    std::uint64_t p_;
    std::set<std::uint64_t> members_;
};

/// D_0, ..., D_{p-1} and P: residues modulo p^(r+1) split by H_{r-1}.
struct ClassPartition {
    PrimePowerModulus modulus;
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<std::uint64_t> multiples;

    /// Class index of residue u, or nullopt when p | u.
    std::optional<std::uint64_t> class_of(std::uint64_t u) const;
};

/// (a_j(u)) over F_p; period p^(j+2). Throws std::invalid_argument if j >= r.
PeriodicSequence level_sequence(const PrimePowerModulus& m, unsigned j);

ClassPartition class_partition(const PrimePowerModulus& m);

/// D_l rebuilt from the residues v < p^r coprime to p via v + (v (H(v) - l) mod p) p^r.
std::vector<std::uint64_t> class_by_lifting(const PrimePowerModulus& m, std::uint64_t l);

/// f(u) = 1 iff u mod p^(r+1) lies in the union of D_l, l in I.
PeriodicSequence binary_class_sequence(const PrimePowerModulus& m, const IndexSet& index_set);

/// As binary_class_sequence, with the multiples of p also set to 1.
PeriodicSequence balanced_class_sequence(const PrimePowerModulus& m, const IndexSet& index_set);

/// e(u) = 1 iff 2 Q_r(u) >= p^r; one period of length p^(r+1) is stored.
PeriodicSequence threshold_sequence(const PrimePowerModulus& m);

/// Discrete logarithm of Q_r(u) to the smallest primitive root of p^r, reduced
/// mod `order`; zero when p | Q_r(u). Throws std::invalid_argument unless
/// order > 1 divides phi(p^r).
PeriodicSequence mary_sequence(const PrimePowerModulus& m, std::uint64_t order);

/// f^{(i)}(u) = 1 iff p does not divide u and F^{(i)}(u) lies in I; period p^(i+1).
PeriodicSequence order_i_binary_sequence(std::uint64_t p, unsigned order, const IndexSet& index_set);

/// (F^{(i)}(u)) over F_p; period p^(i+1).
PeriodicSequence order_i_sequence(std::uint64_t p, unsigned order);

} // namespace eulerq
