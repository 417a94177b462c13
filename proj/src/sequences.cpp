#include "eulerq/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace eulerq {

PeriodicSequence::PeriodicSequence(std::uint64_t alphabet_size, std::vector<std::uint32_t> symbols, SequenceTag tag)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)), tag_(std::move(tag)) {
    if (alphabet_size_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (symbols_.empty()) throw std::invalid_argument("period must be positive");
    for (auto s : symbols_) {
        if (s >= alphabet_size_)
            throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                        std::to_string(alphabet_size_));
    }
}

std::size_t PeriodicSequence::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(symbols_.begin(), symbols_.end(), [](auto s) { return s != 0; }));
}

std::size_t PeriodicSequence::least_period() const {
    const std::size_t n = symbols_.size();
    for (std::size_t t = 1; t < n; ++t) {
        if (n % t != 0) continue;
        bool ok = true;
        for (std::size_t u = t; u < n && ok; ++u) ok = symbols_[u] == symbols_[u - t];
        if (ok) return t;
    }
    return n;
}

IndexSet::IndexSet(std::uint64_t p, std::set<std::uint64_t> members) : p_(p), members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("index set must be non-empty");
    if (*members_.rbegin() >= p_)
        throw std::invalid_argument("index " + std::to_string(*members_.rbegin()) + " is not below p = " +
                                    std::to_string(p_));
}

std::optional<std::uint64_t> ClassPartition::class_of(std::uint64_t u) const {
    u %= modulus.sequence_period();
    for (std::size_t l = 0; l < classes.size(); ++l) {
        if (std::binary_search(classes[l].begin(), classes[l].end(), u)) return l;
    }
    return std::nullopt;
}

namespace {

/// H_{r-1}(u) for u in [0, p^(r+1)).
std::vector<std::uint32_t> top_digits(const PrimePowerModulus& m) {
    const auto n = m.sequence_period();
    std::vector<std::uint32_t> h(n);
    for (std::uint64_t u = 0; u < n; ++u) h[u] = static_cast<std::uint32_t>(new_quotient_h(m, u));
    return h;
}

SequenceTag tag_for(const PrimePowerModulus& m, std::string kind, std::vector<std::uint64_t> index_set = {}) {
    return SequenceTag{m.p(), m.r(), std::move(kind), std::move(index_set)};
}

PeriodicSequence class_indicator(const PrimePowerModulus& m, const IndexSet& index_set, bool include_multiples,
                                 const char* kind) {
    const auto h = top_digits(m);
    std::vector<std::uint32_t> bits(h.size(), 0);
    for (std::size_t u = 0; u < h.size(); ++u) {
        if (u % m.p() == 0)
            bits[u] = include_multiples ? 1 : 0;
        else
            bits[u] = index_set.contains(h[u]) ? 1 : 0;
    }
    return PeriodicSequence(2, std::move(bits), tag_for(m, kind, index_set.to_vector()));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

/// Baby-step giant-step discrete logarithm in the cyclic group (Z/n)^*.
class DiscreteLog {
public:
    DiscreteLog(std::uint64_t generator, std::uint64_t n, std::uint64_t group_order)
        : n_(n), order_(group_order),
          step_(static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group_order))))) {
        std::uint64_t x = 1;
        for (std::uint64_t j = 0; j < step_; ++j) {
            baby_.try_emplace(x, j);
            x = mulmod(x, generator, n_);
        }
        // giant = generator^(-step) = generator^(order - step mod order)
        giant_ = 1;
        std::uint64_t e = (order_ - step_ % order_) % order_;
        std::uint64_t b = generator;
        while (e != 0) {
            if (e & 1U) giant_ = mulmod(giant_, b, n_);
            b = mulmod(b, b, n_);
            e >>= 1;
        }
    }

    std::uint64_t operator()(std::uint64_t y) const {
        std::uint64_t gamma = y % n_;
        for (std::uint64_t i = 0; i <= step_; ++i) {
            if (auto it = baby_.find(gamma); it != baby_.end()) return (i * step_ + it->second) % order_;
            gamma = mulmod(gamma, giant_, n_);
        }
        throw std::domain_error("discrete log does not exist");
    }

private:
    std::uint64_t n_;
    std::uint64_t order_;
    std::uint64_t step_;
    std::uint64_t giant_ = 1;
    std::unordered_map<std::uint64_t, std::uint64_t> baby_;
};

} // namespace

PeriodicSequence level_sequence(const PrimePowerModulus& m, unsigned j) {
    if (j >= m.r())
        throw std::invalid_argument("level index " + std::to_string(j) + " out of range for r = " +
                                    std::to_string(m.r()));
    const PrimePowerModulus upper(m.p(), j + 1);
    auto tag = tag_for(m, "level");
    return PeriodicSequence(m.p(), top_digits(upper), std::move(tag));
}

ClassPartition class_partition(const PrimePowerModulus& m) {
    ClassPartition out{m, std::vector<std::vector<std::uint64_t>>(m.p()), {}};
    const auto h = top_digits(m);
    for (std::uint64_t u = 0; u < h.size(); ++u) {
        if (u % m.p() == 0)
            out.multiples.push_back(u);
        else
            out.classes[h[u]].push_back(u);
    }
    return out;
}

std::vector<std::uint64_t> class_by_lifting(const PrimePowerModulus& m, std::uint64_t l) {
    const std::uint64_t p = m.p();
    const auto pr = static_cast<std::uint64_t>(m.modulus());
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 1; v < pr; ++v) {
        if (v % p == 0) continue;
        const std::uint64_t h = new_quotient_h(m, v);
        const std::uint64_t shift = (v % p) * ((h + p - l) % p) % p;
        out.push_back(v + shift * pr);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PeriodicSequence binary_class_sequence(const PrimePowerModulus& m, const IndexSet& index_set) {
    return class_indicator(m, index_set, false, "class");
}

PeriodicSequence balanced_class_sequence(const PrimePowerModulus& m, const IndexSet& index_set) {
    return class_indicator(m, index_set, true, "balanced");
}

PeriodicSequence threshold_sequence(const PrimePowerModulus& m) {
    const auto n = m.sequence_period();
    std::vector<std::uint32_t> bits(n);
    for (std::uint64_t u = 0; u < n; ++u) bits[u] = 2 * euler_quotient(m, u) >= m.modulus() ? 1 : 0;
    return PeriodicSequence(2, std::move(bits), tag_for(m, "threshold"));
}

PeriodicSequence mary_sequence(const PrimePowerModulus& m, std::uint64_t order) {
    const auto pr = static_cast<std::uint64_t>(m.modulus());
    const auto phi = static_cast<std::uint64_t>(m.phi());
    if (order < 2 || phi % order != 0)
        throw std::invalid_argument("order " + std::to_string(order) + " must be > 1 and divide phi(p^r) = " +
                                    std::to_string(phi));
    const DiscreteLog index(smallest_primitive_root(pr), pr, phi);
    const auto n = m.sequence_period();
    std::vector<std::uint32_t> out(n, 0);
    for (std::uint64_t u = 0; u < n; ++u) {
        const auto q = static_cast<std::uint64_t>(euler_quotient(m, u));
        if (q % m.p() != 0) out[u] = static_cast<std::uint32_t>(index(q) % order);
    }
    return PeriodicSequence(order, std::move(out), tag_for(m, "mary"));
}

PeriodicSequence order_i_sequence(std::uint64_t p, unsigned order) {
    const PrimePowerModulus m(p, order);
    const auto n = m.sequence_period();
    std::vector<std::uint32_t> out(n);
    for (std::uint64_t u = 0; u < n; ++u) out[u] = static_cast<std::uint32_t>(fermat_quotient_order(m, order, u));
    return PeriodicSequence(p, std::move(out), SequenceTag{p, order, "fermat-order", {}});
}

PeriodicSequence order_i_binary_sequence(std::uint64_t p, unsigned order, const IndexSet& index_set) {
    const PrimePowerModulus m(p, order);
    const auto n = m.sequence_period();
    std::vector<std::uint32_t> out(n, 0);
    for (std::uint64_t u = 0; u < n; ++u) {
        if (u % p != 0 && index_set.contains(fermat_quotient_order(m, order, u))) out[u] = 1;
    }
    return PeriodicSequence(2, std::move(out), SequenceTag{p, order, "order-class", index_set.to_vector()});
}

} // namespace eulerq
