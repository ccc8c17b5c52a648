#include "twh/presets.hpp"

namespace twh {

namespace {

AffineLatticeMap linear_map(IntMat m) {
    AffineLatticeMap a;
    a.translation.assign(m.size(), Rotation());
    a.matrix = std::move(m);
    return a;
}

}  // namespace

BernsteinDatum sl2_iwahori_datum() {
    BernsteinDatum d = make_datum(1, {linear_map({{-1}})});
    d.name = "sl2-iwahori";
    return d;
}

BernsteinDatum trivial_group_datum(std::size_t d) {
    BernsteinDatum out = make_datum(d, {});
    out.name = "trivial-" + std::to_string(d);
    return out;
}

BernsteinDatum quaternion_datum() {
    const AffineLatticeMap s1 = linear_map({{-1, 0}, {0, 1}}), s2 = linear_map({{1, 0}, {0, -1}});
    BernsteinDatum d = make_datum(2, {s1, s2});
    const std::vector<std::uint32_t> gens{d.group.index_of(s1), d.group.index_of(s2)};
    d.cocycle = bilinear_cocycle(d.cocycle.group_ptr(), gens, {{0, 0}, {1, 0}}, 2);
    d.name = "quaternion-2torus";
    return d;
}

}  // namespace twh
