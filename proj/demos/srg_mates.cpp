// Compares the Shrikhande graph with the 4x4 rook's graph, two strongly
// regular graphs with parameters (16,6,2,2), under all four invariants.

#include <iostream>

#include "qwalk/qwalk.hpp"

int main() {
    using namespace qwalk;
    const graph a = generators::shrikhande();
    const graph b = generators::rook(4, 4);
    for (const auto* g : {&a, &b}) {
        const auto p = srg_parameters(*g);
        std::cout << write_graph6(*g) << "  SRG(" << p->n << "," << p->k << "," << p->lambda << "," << p->mu << ")\n";
    }

    const compare_report r = compare(profile(a, "shrikhande"), profile(b, "rook:4"));
    for (invariant i : all_invariants)
        std::cout << to_string(i) << ": " << to_string(r[i]) << '\n';
    std::cout << "first distinguishing invariant: "
              << (r.distinguishing ? std::string(to_string(*r.distinguishing)) : "none") << '\n';
    return 0;
}
