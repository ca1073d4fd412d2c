// Computes mixed volumes and surface measures of a few lattice polytopes.

#include <cstdio>

#include "svx/polytope.hpp"

using namespace svx;

int main()
{
    auto square = unit_cube(2);
    auto tri = convex_hull(2, {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}});
    std::printf("vol(square)      = %s\n", rat_str(volume(square)).c_str());
    std::printf("vol(triangle)    = %s\n", rat_str(volume(tri)).c_str());
    std::printf("V(square, tri)   = %s\n", rat_str(mixed_volume({square, tri})).c_str());
    std::printf("vol(square+tri)  = %s\n",
                rat_str(volume(minkowski_sum(square, tri))).c_str());

    auto sm = surface_area_measure(tri);
    std::printf("surface measure of the triangle:\n");
    for (const auto& a : sm.atoms) {
        std::printf("  dir (");
        for (std::size_t i = 0; i < a.dir.size(); ++i)
            std::printf("%s%s", i ? ", " : "", rat_str(a.dir[i]).c_str());
        std::printf(")  scale %s\n", rat_str(a.scale).c_str());
    }
    auto bc = surface_barycenter(sm);
    std::printf("barycenter = (%s, %s)\n", rat_str(bc[0]).c_str(), rat_str(bc[1]).c_str());
    return 0;
}
