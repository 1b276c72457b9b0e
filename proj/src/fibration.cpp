// SPDX-License-Identifier: Apache-2.0
#include <arcspace/fibration.hpp>

namespace arcspace
{

namespace
{

// adj(z) f(z) lands in g(z) V^1 exactly when the second block cannot
// contribute, i.e. o_j >= o_l + 1 for j outside and l inside the minor.
void check_membership_weights(const StratumFrame &frame)
{
    for (std::size_t j : frame.second_block()) {
        for (std::size_t l : frame.first_block()) {
            if (frame.weight(j) < frame.weight(l) + 1) {
                throw UnsupportedShape("membership test needs weights with o_j >= o_l + 1 across the blocks");
            }
        }
    }
}

} // namespace

bool zdstar_member(const StratumFrame &frame, const TruncatedVec &z)
{
    detail::check_arc(frame, z, "remainder");
    if (frame.d() == 0) {
        for (const auto &s : z) {
            if (!s.is_zero_to_precision()) {
                throw NotOnStratum("the remainder space at d = 0 is {0}");
            }
        }
        for (const auto &fi : frame.sys().f) {
            if (!substitute(fi, z).is_zero_to_precision()) {
                return false;
            }
        }
        return true;
    }
    check_membership_weights(frame);
    check_remainder(frame, z);
    const detail::AtRemainder<Rational> at(frame, at_frame_precision(frame, z));
    const TruncatedVec adjf = mat_vec(at.adj, at.fz);
    const auto &b1 = frame.first_block();
    for (std::size_t l = 0; l < b1.size(); ++l) {
        const int need = frame.d() + frame.degree_bound(b1[l]) + 1;
        const OrderResult o = adjf[l].order();
        if (o.is_finite()) {
            if (o.value() < need) {
                return false;
            }
        } else if (o.value() + 1 < need) {
            throw PrecisionExhausted("membership needs order " + std::to_string(need) + ", only "
                                     + std::to_string(o.value()) + " coefficients known");
        }
    }
    return true;
}

TruncatedVec fiber_particular(const StratumFrame &frame, const TruncatedVec &z)
{
    if (!zdstar_member(frame, z)) {
        throw NotInZdStar("f(z) is not in the image of the linearized map");
    }
    const TruncatedVec zz = at_frame_precision(frame, z);
    if (frame.d() == 0) {
        return zz;
    }
    const detail::AtRemainder<Rational> at(frame, zz);
    const TruncatedVec adjf = mat_vec(at.adj, at.fz);
    const auto &b1 = frame.first_block();
    TruncatedVec v1;
    int prec = frame.precision();
    for (std::size_t l = 0; l < b1.size(); ++l) {
        v1.push_back((-exact_divide(adjf[l], at.gz)).with_zero_constant());
        prec = std::min(prec, v1.back().precision());
    }
    TruncatedVec v(frame.m(), TruncatedSeries::zero(prec, Rational(0)));
    for (std::size_t l = 0; l < b1.size(); ++l) {
        v[b1[l]] = v1[l];
        if (v1[l].order().lower_bound() < frame.degree_bound(b1[l]) + 1) {
            throw InternalInvariant("particular fiber vector outside the divisor module");
        }
    }
    const TruncatedVec jv = mat_vec(at.jac, v);
    for (std::size_t r = 0; r < jv.size(); ++r) {
        if (!(at.fz[r] + jv[r]).is_zero_to_precision()) {
            throw InternalInvariant("particular fiber vector does not solve the linear equation");
        }
    }
    return v;
}

ZdStarSystem zdstar_equations(const PolySystem &sys, const MinorSelection &sel, int d)
{
    if (sys.k() != 1) {
        throw UnsupportedShape("symbolic equations are generated for hypersurfaces only; use membership tests");
    }
    if (d < 1) {
        throw InvalidArgument("stratum order must be at least 1");
    }
    const StratumFrame frame(sys, sel, DivisionWeights::canonical(sys.m, sys.k()), d, Gauge::Monomial, 2 * d);

    ZdStarSystem out;
    out.m = sys.m;
    out.k = sys.k();
    out.d = d;
    for (std::size_t i = 0; i < sys.m; ++i) {
        for (int j = 1; j <= frame.degree_bound(i); ++j) {
            out.coords.emplace_back(static_cast<int>(i) + 1, j);
            out.names.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(j));
        }
    }
    const std::size_t nv = out.coords.size();

    // Generic remainder vector with symbolic coefficients.
    SeriesVec<CoeffPolynomial> z;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sys.m; ++i) {
        std::vector<CoeffPolynomial> c(static_cast<std::size_t>(frame.degree_bound(i)) + 1, CoeffPolynomial(nv));
        for (int j = 1; j <= frame.degree_bound(i); ++j) {
            c[static_cast<std::size_t>(j)] = CoeffPolynomial::variable(nv, idx++);
        }
        z.emplace_back(std::move(c), 2 * d, true);
    }
    const Series<CoeffPolynomial> fz = substitute(sys.f[0], z);
    const Series<CoeffPolynomial> gz = substitute(frame.minor(), z);
    std::vector<CoeffPolynomial> fco(fz.coeffs().begin(), fz.coeffs().begin() + 2 * d + 1);
    std::vector<CoeffPolynomial> gco(gz.coeffs().begin(), gz.coeffs().begin() + d + 1);

    // Linear monomial stratum conditions c*z_{i,j} = 0 become substitutions.
    for (bool found = true; found;) {
        found = false;
        for (int j = 0; j < d && !found; ++j) {
            const CoeffPolynomial &c = gco[static_cast<std::size_t>(j)];
            if (c.terms().size() != 1 || c.total_degree() != 1) {
                continue;
            }
            const Monomial &mono = c.terms().begin()->first;
            const std::size_t var = static_cast<std::size_t>(std::find(mono.begin(), mono.end(), 1) - mono.begin());
            out.fixed_zero.push_back(out.coords[var]);
            for (auto &p : fco) {
                p = p.with_variable_zero(var);
            }
            for (auto &p : gco) {
                p = p.with_variable_zero(var);
            }
            found = true;
        }
    }
    for (int j = 0; j < d; ++j) {
        if (!gco[static_cast<std::size_t>(j)].is_zero()) {
            out.equations.push_back(gco[static_cast<std::size_t>(j)].monic(TermOrder::FirstVariableLargest));
        }
    }
    for (const auto &p : fco) {
        if (!p.is_zero()) {
            out.equations.push_back(p.monic(TermOrder::FirstVariableLargest));
        }
    }
    out.inequation = gco[static_cast<std::size_t>(d)].monic(TermOrder::FirstVariableLargest);
    return out;
}

std::string ZdStarSystem::to_text() const
{
    std::string out;
    for (const auto &e : equations) {
        out += e.str(names, TermOrder::FirstVariableLargest) + " = 0\n";
    }
    out += inequation.str(names, TermOrder::FirstVariableLargest) + " != 0\n";
    return out;
}

std::string ZdStarSystem::fixed_text() const
{
    std::string out;
    for (const auto &[i, j] : fixed_zero) {
        out += "z" + std::to_string(i) + "_" + std::to_string(j) + " = 0\n";
    }
    return out;
}

bool ZdStarSystem::satisfied_by(const TruncatedVec &z) const
{
    if (z.size() != m) {
        throw ArityMismatch("remainder vector has the wrong length");
    }
    auto coeff = [&](int i, int j) { return z[static_cast<std::size_t>(i - 1)].coeff_or_zero(j); };
    for (const auto &[i, j] : fixed_zero) {
        if (!coeff(i, j).is_zero()) {
            return false;
        }
    }
    std::vector<Rational> values;
    for (const auto &[i, j] : coords) {
        values.push_back(coeff(i, j));
    }
    for (const auto &e : equations) {
        if (!e.evaluate(values).is_zero()) {
            return false;
        }
    }
    return !inequation.evaluate(values).is_zero();
}

} // namespace arcspace
