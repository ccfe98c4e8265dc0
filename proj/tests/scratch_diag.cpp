// temporary diagnostic (not part of the build targets by default)
#include "k3fib/fibrations.hpp"

#include <iostream>

using namespace k3fib;

int main() {
    // dump (J-values, a, DiscD, Discd, ratio) as python for exponent fitting
    Rng rng(99);
    std::cout << "data = [\n";
    for (int i = 0; i < 6; ++i) {
        InvariantPoint J = rng.invariant_point();
        Rat E1 = j30_value(J);
        WModel mx = build_mod(FibClass::Maximal, J);
        auto [fm, gm] = mx.depress();
        UPoly f = UPoly::from_mpoly(fm, "t"), g = UPoly::from_mpoly(gm, "t");
        UPoly delta = f.pow(3) * Rat(4) + g.pow(2) * Rat(27);
        UPoly d = delta * J.J6.pow(16).inv();
        Rat E2 = discriminant(d);
        std::cout << "  dict(J2='" << J.J2.str() << "', J3='" << J.J3.str() << "', J4='"
                  << J.J4.str() << "', J5='" << J.J5.str() << "', J6='" << J.J6.str() << "', a='"
                  << J.a->str() << "', ratio='" << (E2 / E1).str() << "'),\n";
    }
    std::cout << "]\n";
    return 0;
}
