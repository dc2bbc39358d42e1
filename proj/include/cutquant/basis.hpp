#ifndef CUTQUANT_BASIS_HPP
#define CUTQUANT_BASIS_HPP

#include "cutquant/rational.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cutquant {

// One element of a labeled orthonormal basis. Components are the quantum
// numbers (exact rationals); the sector tag distinguishes direct-sum
// summands and is empty otherwise. Equality is component-wise exact.
struct BasisLabel {
    std::vector<Rational> components;
    std::string sector_tag;

    bool operator==(const BasisLabel& other) const = default;
    bool operator<(const BasisLabel& other) const;
    std::string to_string() const;
};

struct BasisLabelHash {
    std::size_t operator()(const BasisLabel& l) const;
};

class LabeledBasis;
using BasisPtr = std::shared_ptr<const LabeledBasis>;

// Ordered basis of a truncated Hilbert space. Immutable after
// construction; shared via BasisPtr so operators and states can hold a
// reference. Labels are pairwise distinct and of constant arity.
class LabeledBasis {
  public:
    explicit LabeledBasis(std::vector<BasisLabel> labels);

    LabeledBasis(const LabeledBasis&) = delete;
    LabeledBasis& operator=(const LabeledBasis&) = delete;

    std::size_t dimension() const { return labels_.size(); }
    const BasisLabel& label(std::size_t i) const { return labels_[i]; }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    // Index lookup; the map is built lazily on first use.
    std::optional<std::size_t> index_of(const BasisLabel& l) const;

    bool same_labels(const LabeledBasis& other) const;

  private:
    struct unchecked_tag {};
    LabeledBasis(std::vector<BasisLabel> labels, unchecked_tag);

    friend BasisPtr make_basis_unchecked(std::vector<BasisLabel>);

    std::vector<BasisLabel> labels_;
    mutable std::once_flag index_once_;
    mutable std::unordered_map<BasisLabel, std::size_t, BasisLabelHash> index_;
};

BasisPtr make_basis(std::vector<BasisLabel> labels);

// Skips the distinctness scan; for factories whose output is distinct by
// construction (tensor products, tagged direct sums).
BasisPtr make_basis_unchecked(std::vector<BasisLabel> labels);

// Convenience: one-component integer labels n in {lo..hi}.
BasisPtr integer_range_basis(std::int64_t lo, std::int64_t hi);

// Two bases agree if they are the same object or have equal label lists.
bool same_basis(const BasisPtr& a, const BasisPtr& b);

// Product basis, row-major (a-index outer); labels are concatenated
// component tuples. Sector tags pass through (joined with '|' if both
// factors carry one).
BasisPtr tensor_basis(const BasisPtr& a, const BasisPtr& b);

// Concatenation of tagged summands; every label of summand i receives
// tag tags[i]. Tags must be pairwise distinct and nonempty.
BasisPtr direct_sum(const std::vector<BasisPtr>& spaces,
                    const std::vector<std::string>& tags);

}  // namespace cutquant

#endif
