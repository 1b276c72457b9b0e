// SPDX-License-Identifier: Apache-2.0
#include <arcspace/factorization.hpp>

namespace arcspace
{

FactorizationChart::FactorizationChart(PolySystem sys, MinorSelection sel, int d, Gauge gauge, int precision)
    : frame_(sys, sel, DivisionWeights::canonical(sys.m, sys.k()), d, gauge, precision)
{
    if (d < 1) {
        throw InvalidArgument("factorization charts need a stratum order d >= 1");
    }
}

} // namespace arcspace
