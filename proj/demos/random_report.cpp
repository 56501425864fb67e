// Generates a random model from a seed, draws a parabolic pair, verifies
// the identity, and prints the canonical instance and report documents.
// The same seed always yields the same two documents.

#include <cstdlib>
#include <iostream>
#include <string>

#include <nfdeg/nfdeg.hpp>

using namespace nfdeg;

int main(int argc, char** argv) {
    std::uint64_t seed = 12;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    Rng shape(derive_seed(seed, 0));
    int g = 1 + static_cast<int>(shape.below(2));
    int k = 2 + static_cast<int>(shape.below(3));
    PencilRef p = random_instance(g, k, shape.raw());

    Rng draw(derive_seed(seed, 1));
    auto cocycles = random_parabolic_cocycles(p, 2, draw);

    InstanceDoc doc = doc_from_pencil(*p);
    doc.seed = std::to_string(seed);
    doc.label = "demo-seed-" + std::to_string(seed);
    for (const auto& [c, a] : cocycles) doc.cocycles.push_back(entry_from_cocycle(c, a));

    std::cout << "instance document:\n" << canonical_bytes(to_json(doc)) << "\n";

    TheoremReport report = verify_theorem(p, cocycles[0].first, cocycles[0].second,
                                          cocycles[1].first, cocycles[1].second, 4);
    ReportDescriptor desc;
    desc.instance_hash = hash_instance(doc);
    desc.pencil_hash = hash_pencil(doc);
    desc.cocycle_hashes = {hash_cocycle(doc.cocycles[0]), hash_cocycle(doc.cocycles[1])};
    desc.pair = {0, 1};
    desc.seed = doc.seed;

    std::cout << "report document:\n" << canonical_bytes(report_to_json(report, desc));
    std::cout << "\nverdict: lhs " << to_string(report.lhs) << ", rhs "
              << to_string(report.rhs) << ", " << (report.equal ? "EQUAL" : "NOT EQUAL")
              << "\n";
    return report.equal ? 0 : 1;
}
