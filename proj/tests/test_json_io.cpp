#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include <nfdeg/json_io.hpp>
#include <nfdeg/pencil.hpp>
#include <nfdeg/rng.hpp>

using namespace nfdeg;

namespace {

InstanceDoc builtin_doc() {
    PencilRef p = builtin_elliptic12();
    InstanceDoc doc = doc_from_pencil(*p);
    doc.label = "elliptic12";
    for (const auto& [c, pd] : builtin_elliptic12_pair(p))
        doc.cocycles.push_back(entry_from_cocycle(c, pd));
    return doc;
}

} // namespace

TEST_CASE("exact scalars serialize to canonical strings and back") {
    CHECK(to_string(Rat(-3)) == "-3");
    CHECK(to_string(Rat(1, 2)) == "1/2");
    CHECK(to_string(rat_from_string("2/4")) == "1/2");
    CHECK(to_string(rat_from_string("-4/6")) == "-2/3");
    CHECK(rat_from_string("1/2") == Rat(1, 2));
    CHECK(rat_from_string("-6/4") == Rat(-3, 2));
    CHECK(rat_from_string("17") == Rat(17));
    CHECK(int_from_string("-41") == Int(-41));
    CHECK_THROWS_AS(int_from_string("1/2"), parse_error);
    CHECK_THROWS_AS(int_from_string(""), parse_error);
    CHECK_THROWS_AS(int_from_string("1.5"), parse_error);
    CHECK_THROWS_AS(int_from_string("+3"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), parse_error);
}

TEST_CASE("instance documents round-trip byte for byte") {
    InstanceDoc doc = builtin_doc();
    std::string bytes = canonical_bytes(to_json(doc));
    CHECK(bytes.back() == '\n');
    InstanceDoc again = instance_from_json(parse_json(bytes));
    CHECK(canonical_bytes(to_json(again)) == bytes);
    CHECK(again.genus == 1);
    CHECK(again.punctures == 12);
    CHECK(again.lefschetz);
    REQUIRE(again.cocycles.size() == 2);
    REQUIRE(again.cocycles[0].potentials.has_value());
    CHECK(again.cocycles[0].ring == Ring::integers);
    CHECK(again.label == doc.label);

    PencilRef p = pencil_from_doc(again);
    CHECK(p->lefschetz);
    TwistedCocycle c = cocycle_from_entry(p, again.cocycles[0]);
    auto pd = potentials_from_entry(again.cocycles[0]);
    REQUIRE(pd.has_value());
    CHECK(validate_potentials(c, *pd));
}

TEST_CASE("random instances round-trip with seeds recorded") {
    PencilRef p = random_instance(2, 4, derive_seed(9, 0));
    InstanceDoc doc = doc_from_pencil(*p);
    doc.seed = "9";
    Rng rng(derive_seed(9, 1));
    for (const auto& [c, pd] : random_parabolic_cocycles(p, 2, rng))
        doc.cocycles.push_back(entry_from_cocycle(c, pd));
    std::string bytes = canonical_bytes(to_json(doc));
    InstanceDoc again = instance_from_json(parse_json(bytes));
    CHECK(canonical_bytes(to_json(again)) == bytes);
    CHECK_FALSE(again.lefschetz);
    CHECK(again.seed == std::optional<std::string>("9"));
    CHECK(again.vanishing_cycles.has_value() == doc.vanishing_cycles.has_value());
}

TEST_CASE("document hashes identify content, not provenance") {
    InstanceDoc doc = builtin_doc();
    InstanceDoc same = builtin_doc();
    CHECK(hash_instance(doc) == hash_instance(same));
    CHECK(hash_instance(doc).size() == 16);
    CHECK(hash_pencil(doc) == hash_pencil(same));
    CHECK(hash_cocycle(doc.cocycles[0]) == hash_cocycle(same.cocycles[0]));
    CHECK(hash_cocycle(doc.cocycles[0]) != hash_cocycle(doc.cocycles[1]));

    InstanceDoc labeled = builtin_doc();
    labeled.label = "renamed";
    CHECK(hash_pencil(doc) == hash_pencil(labeled));
    CHECK(hash_instance(doc) != hash_instance(labeled));

    // Potentials are a certificate, not part of the cocycle identity.
    InstanceDoc stripped = builtin_doc();
    stripped.cocycles[0].potentials.reset();
    CHECK(hash_cocycle(doc.cocycles[0]) == hash_cocycle(stripped.cocycles[0]));
}

TEST_CASE("malformed documents fail with parse errors, not crashes") {
    InstanceDoc doc = builtin_doc();
    json good = to_json(doc);

    json j = good;
    j.erase("genus");
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["format"] = "something-else";
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["version"] = format_version + 1;
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["punctures"] = 11;
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["monodromies"][0][0] = "x";
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["cocycles"][0]["ring"] = "float";
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["cocycles"][0]["values"][0] = json::array({"1", "2", "3"});
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    j = good;
    j["genus"] = 0;
    CHECK_THROWS_AS(instance_from_json(j), parse_error);

    CHECK_THROWS_AS(parse_json("{not json"), parse_error);

    // Structurally valid JSON that fails model validation throws typed
    // construction errors downstream instead.
    j = good;
    j["monodromies"][0][0] = "2";
    InstanceDoc parsed = instance_from_json(j);
    CHECK_THROWS_AS(pencil_from_doc(parsed), symplectic_violation_error);
}

TEST_CASE("report serialization carries the verdict and omits timings") {
    TheoremReport r;
    r.lhs = Rat(-2);
    r.rhs = Rat(-2);
    r.equal = true;
    r.mesh = 4;
    r.quadrature_value = -2.0;
    r.quadrature_abs_error = 0.0;
    r.lhs_microseconds = 123456;
    r.rhs_microseconds = 654321;
    ReportDescriptor d;
    d.instance_hash = "0f1e2d3c4b5a6978";
    d.pencil_hash = "fedcba9876543210";
    d.cocycle_hashes = {"aaaaaaaaaaaaaaaa", "bbbbbbbbbbbbbbbb"};
    d.pair = {0, 1};
    d.seed = "7";

    std::string bytes = canonical_bytes(report_to_json(r, d));
    CHECK(bytes.find("microseconds") == std::string::npos);
    CHECK(bytes.find("123456") == std::string::npos);
    json j = parse_json(bytes);
    CHECK(j["format"] == "nfdeg-report");
    CHECK(j["lhs"] == "-2");
    CHECK(j["rhs"] == "-2");
    CHECK(j["equal"] == true);
    CHECK(j["sigma"] == 1);
    CHECK(j["conventions"] == conventions_tag);
    CHECK(j["pair"][1] == 1);
    CHECK(j["quadrature"]["mesh"] == 4);
    CHECK(canonical_bytes(report_to_json(r, d)) == bytes);
}

TEST_CASE("file IO round-trips bytes and reports failures as io errors") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "nfdeg-test-io";
    fs::create_directories(dir);
    fs::path file = dir / "doc.json";
    std::string bytes = canonical_bytes(to_json(builtin_doc()));
    write_file(file.string(), bytes);
    CHECK(read_file(file.string()) == bytes);
    CHECK_THROWS_AS(read_file((dir / "missing.json").string()), io_error);
    CHECK_THROWS_AS(write_file((dir / "no-such-dir" / "f.json").string(), bytes), io_error);
    fs::remove_all(dir);
}
