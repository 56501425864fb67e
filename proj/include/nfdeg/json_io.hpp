#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nfdeg/cohomology.hpp"
#include "nfdeg/degree.hpp"
#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/version.hpp"

namespace nfdeg {

using json = nlohmann::json;

// One cocycle entry of an instance document.
struct CocycleEntry {
    Ring ring = Ring::integers;
    std::vector<QVec> values;
    std::optional<std::vector<QVec>> potentials;
};

// In-memory form of an instance document: a pencil plus its cocycles and
// provenance fields. Serialization is canonical (sorted keys, two-space
// indent, trailing newline, all exact scalars as strings), so documents
// regenerate byte-identically and hash stably.
struct InstanceDoc {
    int genus = 1;
    int punctures = 0;
    std::vector<IMat> monodromies;
    std::optional<std::vector<IVec>> vanishing_cycles;
    bool lefschetz = false;
    std::vector<CocycleEntry> cocycles;
    std::optional<std::string> seed;
    std::optional<std::string> label;
};

// ---- scalar/vector/matrix <-> json ----

namespace detail {

inline json vec_to_json(const QVec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(to_string(x));
    return arr;
}

inline json ivec_to_json(const IVec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(to_string(x));
    return arr;
}

inline json imat_to_json(const IMat& m) {
    json arr = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) arr.push_back(to_string(m(i, j)));
    return arr;
}

inline QVec vec_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + " must be an array");
    QVec v;
    v.reserve(arr.size());
    for (const json& x : arr) {
        if (!x.is_string()) throw parse_error(where + " entries must be strings");
        v.push_back(rat_from_string(x.get<std::string>()));
    }
    return v;
}

inline IVec ivec_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + " must be an array");
    IVec v;
    v.reserve(arr.size());
    for (const json& x : arr) {
        if (!x.is_string()) throw parse_error(where + " entries must be strings");
        v.push_back(int_from_string(x.get<std::string>()));
    }
    return v;
}

inline IMat imat_from_json(const json& arr, int n, const std::string& where) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw parse_error(where + " must be a row-major array of " + std::to_string(n * n) +
                          " entries");
    IMat m(n, n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const json& x = arr[k++];
            if (!x.is_string()) throw parse_error(where + " entries must be strings");
            m(i, j) = int_from_string(x.get<std::string>());
        }
    return m;
}

} // namespace detail

inline json to_json(const InstanceDoc& doc) {
    json j;
    j["format"] = "nfdeg-instance";
    j["version"] = format_version;
    j["conventions"] = conventions_tag;
    j["genus"] = doc.genus;
    j["punctures"] = doc.punctures;
    j["lefschetz"] = doc.lefschetz;
    json mats = json::array();
    for (const IMat& m : doc.monodromies) mats.push_back(detail::imat_to_json(m));
    j["monodromies"] = std::move(mats);
    if (doc.vanishing_cycles) {
        json cycles = json::array();
        for (const IVec& d : *doc.vanishing_cycles) cycles.push_back(detail::ivec_to_json(d));
        j["vanishing_cycles"] = std::move(cycles);
    }
    json cocycles = json::array();
    for (const CocycleEntry& e : doc.cocycles) {
        json entry;
        entry["ring"] = ring_name(e.ring);
        json values = json::array();
        for (const QVec& v : e.values) values.push_back(detail::vec_to_json(v));
        entry["values"] = std::move(values);
        if (e.potentials) {
            json pots = json::array();
            for (const QVec& v : *e.potentials) pots.push_back(detail::vec_to_json(v));
            entry["potentials"] = std::move(pots);
        }
        cocycles.push_back(std::move(entry));
    }
    j["cocycles"] = std::move(cocycles);
    if (doc.seed) j["seed"] = *doc.seed;
    if (doc.label) j["label"] = *doc.label;
    return j;
}

inline InstanceDoc instance_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("instance document must be an object");
    auto require = [&j](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end()) throw parse_error(std::string("missing field \"") + key + "\"");
        return *it;
    };
    const json& fmt = require("format");
    if (!fmt.is_string() || fmt.get<std::string>() != "nfdeg-instance")
        throw parse_error("not an nfdeg-instance document");
    const json& ver = require("version");
    if (!ver.is_number_integer() || ver.get<int>() != format_version)
        throw parse_error("unsupported document version");
    InstanceDoc doc;
    const json& genus = require("genus");
    if (!genus.is_number_integer() || genus.get<int>() < 1)
        throw parse_error("genus must be a positive integer");
    doc.genus = genus.get<int>();
    const json& punctures = require("punctures");
    if (!punctures.is_number_integer() || punctures.get<int>() < 0)
        throw parse_error("punctures must be a nonnegative integer");
    doc.punctures = punctures.get<int>();
    const json& lef = require("lefschetz");
    if (!lef.is_boolean()) throw parse_error("lefschetz must be a boolean");
    doc.lefschetz = lef.get<bool>();
    const json& mats = require("monodromies");
    if (!mats.is_array() || mats.size() != static_cast<std::size_t>(doc.punctures))
        throw parse_error("monodromies must list one matrix per puncture");
    const int n = 2 * doc.genus;
    for (std::size_t i = 0; i < mats.size(); ++i)
        doc.monodromies.push_back(
            detail::imat_from_json(mats[i], n, "monodromies[" + std::to_string(i) + "]"));
    if (auto it = j.find("vanishing_cycles"); it != j.end()) {
        if (!it->is_array() || it->size() != static_cast<std::size_t>(doc.punctures))
            throw parse_error("vanishing_cycles must list one cycle per puncture");
        std::vector<IVec> cycles;
        for (std::size_t i = 0; i < it->size(); ++i) {
            IVec d = detail::ivec_from_json((*it)[i],
                                            "vanishing_cycles[" + std::to_string(i) + "]");
            if (d.size() != static_cast<std::size_t>(n))
                throw parse_error("vanishing_cycles[" + std::to_string(i) + "] has wrong length");
            cycles.push_back(std::move(d));
        }
        doc.vanishing_cycles = std::move(cycles);
    }
    const json& cocycles = require("cocycles");
    if (!cocycles.is_array()) throw parse_error("cocycles must be an array");
    for (std::size_t k = 0; k < cocycles.size(); ++k) {
        const json& entry = cocycles[k];
        std::string where = "cocycles[" + std::to_string(k) + "]";
        if (!entry.is_object()) throw parse_error(where + " must be an object");
        CocycleEntry e;
        auto rit = entry.find("ring");
        if (rit == entry.end() || !rit->is_string())
            throw parse_error(where + ".ring must be \"int\" or \"rat\"");
        std::string ring = rit->get<std::string>();
        if (ring == "int")
            e.ring = Ring::integers;
        else if (ring == "rat")
            e.ring = Ring::rationals;
        else
            throw parse_error(where + ".ring must be \"int\" or \"rat\"");
        auto vit = entry.find("values");
        if (vit == entry.end() || !vit->is_array() ||
            vit->size() != static_cast<std::size_t>(doc.punctures))
            throw parse_error(where + ".values must list one vector per puncture");
        for (std::size_t i = 0; i < vit->size(); ++i) {
            QVec v = detail::vec_from_json((*vit)[i],
                                           where + ".values[" + std::to_string(i) + "]");
            if (v.size() != static_cast<std::size_t>(n))
                throw parse_error(where + ".values[" + std::to_string(i) + "] has wrong length");
            e.values.push_back(std::move(v));
        }
        if (auto pit = entry.find("potentials"); pit != entry.end()) {
            if (!pit->is_array() || pit->size() != static_cast<std::size_t>(doc.punctures))
                throw parse_error(where + ".potentials must list one vector per puncture");
            std::vector<QVec> pots;
            for (std::size_t i = 0; i < pit->size(); ++i) {
                QVec v = detail::vec_from_json((*pit)[i],
                                               where + ".potentials[" + std::to_string(i) + "]");
                if (v.size() != static_cast<std::size_t>(n))
                    throw parse_error(where + ".potentials[" + std::to_string(i) +
                                      "] has wrong length");
                pots.push_back(std::move(v));
            }
            e.potentials = std::move(pots);
        }
        doc.cocycles.push_back(std::move(e));
    }
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_string()) throw parse_error("seed must be a string");
        doc.seed = it->get<std::string>();
    }
    if (auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw parse_error("label must be a string");
        doc.label = it->get<std::string>();
    }
    return doc;
}

// Canonical bytes of a document: sorted keys (nlohmann objects iterate in
// key order), two-space indent, one trailing newline.
inline std::string canonical_bytes(const json& j) { return j.dump(2) + "\n"; }

// ---- document hashing (identifiers inside reports) ----

inline std::string hash_instance(const InstanceDoc& doc) {
    return hex16(fnv1a64(canonical_bytes(to_json(doc))));
}

inline std::string hash_pencil(const InstanceDoc& doc) {
    json j;
    j["genus"] = doc.genus;
    json mats = json::array();
    for (const IMat& m : doc.monodromies) mats.push_back(detail::imat_to_json(m));
    j["monodromies"] = std::move(mats);
    return hex16(fnv1a64(canonical_bytes(j)));
}

// Hash of the cocycle class data alone (ring and values); potentials are a
// certificate, not part of the identity.
inline std::string hash_cocycle(const CocycleEntry& e) {
    json j;
    j["ring"] = ring_name(e.ring);
    json values = json::array();
    for (const QVec& v : e.values) values.push_back(detail::vec_to_json(v));
    j["values"] = std::move(values);
    return hex16(fnv1a64(canonical_bytes(j)));
}

// ---- bridges between documents and models ----

inline PencilRef pencil_from_doc(const InstanceDoc& doc) {
    return new_pencil(doc.genus, doc.monodromies, doc.vanishing_cycles);
}

inline TwistedCocycle cocycle_from_entry(const PencilRef& p, const CocycleEntry& e) {
    return make_cocycle(p, e.values, e.ring);
}

inline std::optional<ParabolicData> potentials_from_entry(const CocycleEntry& e) {
    if (!e.potentials) return std::nullopt;
    ParabolicData pd;
    pd.ring = e.ring;
    for (const QVec& v : *e.potentials) pd.potentials.push_back(v);
    return pd;
}

inline InstanceDoc doc_from_pencil(const PencilModel& p) {
    InstanceDoc doc;
    doc.genus = p.g;
    doc.punctures = p.m;
    doc.monodromies = p.monodromies;
    doc.vanishing_cycles = p.vanishing_cycles;
    doc.lefschetz = p.lefschetz;
    return doc;
}

inline CocycleEntry entry_from_cocycle(const TwistedCocycle& c,
                                       const std::optional<ParabolicData>& pd) {
    CocycleEntry e;
    e.ring = c.ring;
    e.values = c.values;
    if (pd) {
        if (!pd->complete()) throw domain_error("entry_from_cocycle: incomplete potentials");
        std::vector<QVec> pots;
        pots.reserve(pd->potentials.size());
        for (const auto& a : pd->potentials) pots.push_back(*a);
        e.potentials = std::move(pots);
    }
    return e;
}

// ---- report serialization ----

// Identifier block of a report: which instance, which cocycles, what seed.
struct ReportDescriptor {
    std::string instance_hash;
    std::string pencil_hash;
    std::array<std::string, 2> cocycle_hashes;
    std::array<int, 2> pair{0, 1};
    std::optional<std::string> seed;
};

// Timings are deliberately not serialized so that a report regenerates
// byte-for-byte from the same instance and seed.
inline json report_to_json(const TheoremReport& r, const ReportDescriptor& d) {
    json j;
    j["format"] = "nfdeg-report";
    j["version"] = format_version;
    j["conventions"] = r.conventions;
    j["instance_hash"] = d.instance_hash;
    j["pencil_hash"] = d.pencil_hash;
    j["cocycle_hashes"] = json::array({d.cocycle_hashes[0], d.cocycle_hashes[1]});
    j["pair"] = json::array({d.pair[0], d.pair[1]});
    if (d.seed) j["seed"] = *d.seed;
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["sigma"] = r.sigma;
    j["equal"] = r.equal;
    json quad;
    quad["mesh"] = r.mesh;
    quad["value"] = r.quadrature_value;
    quad["abs_error"] = r.quadrature_abs_error;
    j["quadrature"] = std::move(quad);
    return j;
}

// ---- file IO ----

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("read failure on \"" + path + "\"");
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write \"" + path + "\"");
    out << bytes;
    out.flush();
    if (!out) throw io_error("write failure on \"" + path + "\"");
}

inline json parse_json(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON document");
    return j;
}

} // namespace nfdeg
