// Builds a piecewise-linear convex function and prints its measure.

#include <cstdio>

#include "svx/monge_ampere.hpp"

using namespace svx;

int main()
{
    auto f = make_max_affine(2, {{{Rat(0), Rat(0)}, Rat(0)},
                                 {{Rat(1), Rat(0)}, Rat(-1)},
                                 {{Rat(0), Rat(1)}, Rat(-1)},
                                 {{Rat(1), Rat(1)}, Rat(-2)}});
    auto mu = ma_measure(f);
    std::printf("atoms of the measure:\n");
    for (const auto& [x, m] : mu.atoms) {
        std::printf("  at (");
        for (std::size_t i = 0; i < x.size(); ++i)
            std::printf("%s%s", i ? ", " : "", rat_str(x[i]).c_str());
        std::printf(")  mass %s\n", rat_str(m).c_str());
    }
    std::printf("total mass          = %s\n", rat_str(mu.total()).c_str());
    std::printf("vol(recession body) = %s\n",
                rat_str(volume(recession_body(f))).c_str());

    auto om = ma_oracle(f, 200000, 12345);
    std::printf("sampled total       = %.6f (sigma %.2g)\n", om.total, om.total_sigma);
    return 0;
}
