// SPDX-License-Identifier: Apache-2.0
#include <arcspace/linearization.hpp>

namespace arcspace
{

DivisionWeights::DivisionWeights(std::vector<int> o, std::size_t k) : o_(std::move(o)), k_(k)
{
    if (k_ > o_.size()) {
        throw InvalidWeights("block size exceeds the number of weights");
    }
    int lo = 0;
    int hi_block = 0;
    for (std::size_t i = 0; i < o_.size(); ++i) {
        if (o_[i] < 0) {
            throw InvalidWeights("weights must be non-negative");
        }
        lo = i == 0 ? o_[i] : std::min(lo, o_[i]);
        if (i < k_) {
            hi_block = std::max(hi_block, o_[i]);
        }
    }
    // o_i + o_j >= o_l + 1 for all i, j and l <= k reduces to the extreme case.
    if (k_ > 0 && !o_.empty() && 2 * lo < hi_block + 1) {
        throw InvalidWeights("weights violate o_i + o_j >= o_l + 1 (smallest weight " + std::to_string(lo)
                             + ", largest first-block weight " + std::to_string(hi_block) + ")");
    }
}

DivisionWeights DivisionWeights::canonical(std::size_t m, std::size_t k)
{
    std::vector<int> o(m, 2);
    for (std::size_t i = 0; i < k && i < m; ++i) {
        o[i] = 1;
    }
    return DivisionWeights(std::move(o), k);
}

bool DivisionWeights::is_canonical() const
{
    for (std::size_t i = 0; i < o_.size(); ++i) {
        if (o_[i] != (i < k_ ? 1 : 2)) {
            return false;
        }
    }
    return true;
}

std::string to_string(Gauge g)
{
    return g == Gauge::Monomial ? "monomial" : "minor";
}

StratumFrame::StratumFrame(PolySystem sys, MinorSelection sel, DivisionWeights weights, int d, Gauge gauge,
                           int precision)
    : sys_(std::move(sys)), sel_(std::move(sel)), weights_(std::move(weights)), d_(d), gauge_(gauge),
      precision_(precision)
{
    if (sys_.k() == 0 || sys_.k() > sys_.m) {
        throw UnsupportedShape("stratum frames need 1 <= k <= m equations");
    }
    if (weights_.o().size() != sys_.m || weights_.k() != sys_.k()) {
        throw InvalidWeights("weights must have one entry per variable and block size k");
    }
    if (d_ < 0) {
        throw InvalidArgument("stratum order must be non-negative");
    }
    const std::vector<int> perm = sel_.permutation();
    var_weight_.assign(sys_.m, 0);
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
        var_weight_[static_cast<std::size_t>(perm[pos] - 1)] = weights_.o()[pos];
    }
    for (int c : sel_.cols()) {
        block1_.push_back(static_cast<std::size_t>(c - 1));
    }
    for (int c : sel_.complement()) {
        block2_.push_back(static_cast<std::size_t>(c - 1));
    }
    int top = 0;
    for (std::size_t i = 0; i < sys_.m; ++i) {
        top = std::max(top, degree_bound(i));
    }
    if (precision_ < top) {
        throw PrecisionExhausted("working precision " + std::to_string(precision_)
                                 + " below the largest remainder degree " + std::to_string(top));
    }
    minor_ = minor_det(sys_, sel_);
    jac_ = jacobian(sys_);
    adj_ = adjugate_block(sys_, sel_);
    rest_ = complement_block(sys_, sel_);
}

std::optional<int> stratum_of(const TruncatedVec &y, const PolySystem &sys, const MinorSelection &sel)
{
    const OrderResult o = substitute(minor_det(sys, sel), y).order();
    if (!o.is_finite()) {
        return std::nullopt;
    }
    return o.value();
}

} // namespace arcspace
