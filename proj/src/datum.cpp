#include "twh/datum.hpp"

namespace twh {

BernsteinDatum make_datum(std::size_t rank, const std::vector<AffineLatticeMap>& generators, std::size_t max_order) {
    BernsteinDatum d;
    d.group = generate_group(rank, generators, max_order);
    d.cocycle = Cocycle(std::make_shared<const FiniteGroup>(d.group.group));
    return d;
}

BernsteinDatum with_cocycle(BernsteinDatum d, Cocycle c) {
    if (c.group().order() != d.order()) throw PreconditionError("cocycle is defined on a group of another order");
    d.cocycle = std::move(c);
    return d;
}

StabilizerData stabilizer_data(const BernsteinDatum& d, const TorusPoint& x) {
    if (x.size() != d.rank()) throw PreconditionError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                                      std::to_string(d.rank()));
    StabilizerData s{orbit_of_point(d.group, x), {}, {}};
    s.subgroup = make_subgroup(d.abstract_group(), s.orbit.stabilizer);
    s.cocycle = d.cocycle.restrict(s.subgroup);
    return s;
}

}  // namespace twh
