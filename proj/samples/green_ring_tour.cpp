// Short walk through r(H_{4,2}): presentation, a product, the radical
// and the characters.

#include "taft/greenring.hpp"
#include "taft/spectrum.hpp"

#include <iomanip>
#include <iostream>

int main() {
    using namespace taft;
    const TaftParams p(4, 2);

    std::cout << "green relation: " << presentation(p).relation(IdealKind::green).str() << "\n";

    const GreenElement z = GreenElement::basis(p, 2, 0);
    std::cout << "M(2,0)^2 = " << multiply(z, z).str() << "\n";

    for (const auto& r : radical_basis(p)) std::cout << "radical: " << r.str() << "  square: " << multiply(r, r).str() << "\n";

    std::cout << std::fixed << std::setprecision(6);
    for (const auto& pt : solve_system(p)) {
        const Complex v = evaluate(z, pt);
        std::cout << "character " << pt.label() << ": [M(2,0)] -> " << v.real() + 0.0 << (v.imag() < 0 ? " - " : " + ")
                  << std::abs(v.imag()) << "i\n";
    }
    return 0;
}
