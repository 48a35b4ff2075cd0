// Prints the closed-form spectrum of S+(U) and S+(U^2) for the Petersen
// graph and checks both against the exact characteristic polynomials.

#include <iostream>

#include "qwalk/qwalk.hpp"

int main() {
    using namespace qwalk;
    const graph g = generators::petersen();
    const arc_space arcs(g);

    std::cout << "char_poly(A) = " << char_poly(adjacency_matrix(g)) << "\n\n";

    for (bool squared : {false, true}) {
        const closed_form_spectrum s = squared ? closed_form_spectrum_su2(g) : closed_form_spectrum_su(g);
        std::cout << (squared ? "S+(U^2)" : "S+(U)") << " eigenvalues:\n";
        for (const auto& r : s.rationals)
            std::cout << "  " << r.value.str() << "  x" << r.multiplicity << '\n';
        for (const auto& p : s.pairs) {
            auto [a, b] = p.roots();
            std::cout << "  " << a << ", " << b << "  x" << p.multiplicity << "  (lambda = " << p.lambda << ")\n";
        }
        const int_matrix m = squared ? support_u_power(arcs, 2) : support_u(arcs);
        const bool agrees = char_poly(m) == s.expanded_polynomial();
        std::cout << "  matches char_poly: " << (agrees ? "yes" : "NO") << "\n\n";
        if (!agrees)
            return 1;
    }
    return 0;
}
