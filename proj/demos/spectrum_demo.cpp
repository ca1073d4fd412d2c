// Assembles the quadratic form on a spherical harmonic basis and prints
// its signature for the round reference body.

#include <cstdio>

#include "svx/alexandrov.hpp"

using namespace svx;

int main()
{
    auto basis = harmonic_basis(3, 4);
    for (int level = 3; level <= 5; ++level) {
        auto grid = sphere_grid(level);
        GramAssembler asmb(basis, grid);
        auto gram = asmb.assemble({round_support(3).fn()});
        auto sig = gram_signature(gram, 10 * grid.h * grid.h);
        std::printf("level %d (h=%.3f): %d positive, %d zero, %d negative\n", level, grid.h,
                    sig.n_positive, sig.n_zero, sig.n_negative);
    }
    return 0;
}
