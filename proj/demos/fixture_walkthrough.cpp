// Walks the built-in elliptic fixture end to end: the twelve transvections,
// a frozen pair of parabolic cocycles, both sides of the identity, and the
// geometry of the sections the degree is computed from.

#include <iostream>
#include <string>

#include <nfdeg/nfdeg.hpp>

using namespace nfdeg;

namespace {

std::string show(const QVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string show(const IVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

} // namespace

int main() {
    PencilRef p = builtin_elliptic12();
    std::cout << "model: genus " << p->g << ", " << p->m << " punctures, "
              << (p->lefschetz ? "Lefschetz" : "generic") << "\n";
    std::cout << "vanishing cycles:";
    for (int i = 1; i <= p->m; ++i) std::cout << " " << show(p->cycle(i));
    std::cout << "\n";
    std::cout << "prefix product P_12 is the identity: "
              << (p->prefix_product(p->m) == IMat::identity(2) ? "yes" : "no") << "\n\n";

    auto drawn = builtin_elliptic12_pair(p);
    const auto& [cx, ax] = drawn[0];
    const auto& [cy, ay] = drawn[1];
    std::cout << "cocycle values c_i (first class):\n";
    for (int i = 1; i <= p->m; ++i)
        std::cout << "  c_" << i << " = " << show(cx.value(i)) << ", potential a_" << i
                  << " = " << show(*ax.slot(i)) << "\n";

    Rat lhs = cup_pairing_oracle(cx, ax, cy, ay);
    std::cout << "\ncup pairing of the two classes: " << to_string(lhs) << "\n";
    std::cout << "self pairings: " << to_string(cup_pairing_oracle(cx, ax, cx, ax)) << " and "
              << to_string(cup_pairing_oracle(cy, ay, cy, ay)) << "\n\n";

    NormalFunctionSection sx = build_section(p, cx, ax);
    NormalFunctionSection sy = build_section(p, cy, ay);
    std::cout << "section corners (first class):\n";
    for (std::size_t i = 0; i < sx.corners.size(); ++i)
        std::cout << "  corner " << i << " = " << show(sx.corners[i]) << "\n";
    std::cout << "puncture values (first class):\n";
    for (int i = 1; i <= p->m; ++i)
        std::cout << "  puncture " << i << " = "
                  << show((*sx.puncture_values)[static_cast<std::size_t>(i - 1)]) << "\n";

    Rat deg = degree_pl(sx, sy);
    std::cout << "\ncompactified degree: " << to_string(deg) << "\n";
    std::cout << "identity holds with sign " << theorem_sigma << ": "
              << (lhs == Rat(theorem_sigma) * deg ? "yes" : "no") << "\n";

    for (int mesh : {1, 4, 16}) {
        double q = degree_quadrature(sx, sy, mesh);
        std::cout << "quadrature at mesh " << mesh << ": " << q << "\n";
    }

    TheoremReport report = verify_theorem(p, cx, ax, cy, ay, 4);
    std::cout << "\nfull report: lhs " << to_string(report.lhs) << ", rhs "
              << to_string(report.rhs) << ", " << (report.equal ? "EQUAL" : "NOT EQUAL")
              << "\n";
    return report.equal ? 0 : 1;
}
