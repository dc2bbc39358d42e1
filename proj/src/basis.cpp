#include "cutquant/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cutquant {

bool BasisLabel::operator<(const BasisLabel& other) const {
    if (components != other.components)
        return std::lexicographical_compare(components.begin(), components.end(),
                                            other.components.begin(), other.components.end());
    return sector_tag < other.sector_tag;
}

std::string BasisLabel::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ",";
        out += format_rational(components[i]);
    }
    out += ")";
    if (!sector_tag.empty()) out += "@" + sector_tag;
    return out;
}

std::size_t BasisLabelHash::operator()(const BasisLabel& l) const {
    std::size_t h = std::hash<std::string>{}(l.sector_tag);
    for (const auto& c : l.components)
        h = h * 1099511628211ULL + rational_hash(c);
    return h;
}

LabeledBasis::LabeledBasis(std::vector<BasisLabel> labels)
    : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("basis must have dimension >= 1");
    const std::size_t arity = labels_.front().components.size();
    std::unordered_set<BasisLabel, BasisLabelHash> seen;
    seen.reserve(labels_.size());
    for (const auto& l : labels_) {
        if (l.components.size() != arity)
            throw std::invalid_argument("basis labels must have constant arity");
        if (!seen.insert(l).second)
            throw std::invalid_argument("basis labels must be pairwise distinct: " + l.to_string());
    }
}

LabeledBasis::LabeledBasis(std::vector<BasisLabel> labels, unchecked_tag)
    : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("basis must have dimension >= 1");
}

std::optional<std::size_t> LabeledBasis::index_of(const BasisLabel& l) const {
    std::call_once(index_once_, [this] {
        index_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
    });
    const auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool LabeledBasis::same_labels(const LabeledBasis& other) const {
    return this == &other || labels_ == other.labels_;
}

BasisPtr make_basis(std::vector<BasisLabel> labels) {
    return std::make_shared<const LabeledBasis>(std::move(labels));
}

BasisPtr make_basis_unchecked(std::vector<BasisLabel> labels) {
    return BasisPtr(new LabeledBasis(std::move(labels), LabeledBasis::unchecked_tag{}));
}

BasisPtr integer_range_basis(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("integer_range_basis: lo > hi");
    std::vector<BasisLabel> labels;
    labels.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
        labels.push_back({{Rational(n)}, ""});
    return make_basis_unchecked(std::move(labels));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_labels(*b);
}

namespace {

std::string join_tags(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "|" + b;
}

}  // namespace

BasisPtr tensor_basis(const BasisPtr& a, const BasisPtr& b) {
    if (!a || !b) throw std::invalid_argument("tensor_basis: null operand");
    std::vector<BasisLabel> labels;
    labels.reserve(a->dimension() * b->dimension());
    for (const auto& la : a->labels()) {
        for (const auto& lb : b->labels()) {
            BasisLabel l;
            l.components.reserve(la.components.size() + lb.components.size());
            l.components.insert(l.components.end(), la.components.begin(), la.components.end());
            l.components.insert(l.components.end(), lb.components.begin(), lb.components.end());
            l.sector_tag = join_tags(la.sector_tag, lb.sector_tag);
            labels.push_back(std::move(l));
        }
    }
    return make_basis_unchecked(std::move(labels));
}

BasisPtr direct_sum(const std::vector<BasisPtr>& spaces,
                    const std::vector<std::string>& tags) {
    if (spaces.empty())
        throw std::invalid_argument("direct_sum: at least one summand required");
    if (spaces.size() != tags.size())
        throw std::invalid_argument("direct_sum: one tag per summand required");
    std::unordered_set<std::string> seen;
    for (const auto& t : tags) {
        if (t.empty())
            throw std::invalid_argument("direct_sum: tags must be nonempty");
        if (!seen.insert(t).second)
            throw std::invalid_argument("direct_sum: duplicate sector tag '" + t + "'");
    }
    const std::size_t arity = spaces.front()->label(0).components.size();
    std::vector<BasisLabel> labels;
    for (std::size_t k = 0; k < spaces.size(); ++k) {
        if (spaces[k]->label(0).components.size() != arity)
            throw std::invalid_argument("direct_sum: summands must share label arity");
        for (const auto& l : spaces[k]->labels()) {
            BasisLabel tagged = l;
            tagged.sector_tag = join_tags(tags[k], l.sector_tag);
            labels.push_back(std::move(tagged));
        }
    }
    return make_basis_unchecked(std::move(labels));
}

}  // namespace cutquant
