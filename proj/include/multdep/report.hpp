#pragma once

// Search reports: certified hits with canonical ordering, JSON-lines and CSV
// emission, parameter hashing and checkpoints.  Result payloads carry no
// clocks or counters that vary between identical runs; wall time lives in a
// separate metadata sidecar so report files stay byte-stable.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "multdep/errors.hpp"
#include "multdep/rational.hpp"
#include "multdep/relations.hpp"

namespace multdep {

using json = nlohmann::json;

struct Hit {
    Rational alpha;
    long m = 0;
    long n = 0;
    Relation relation;
};

struct SearchReport {
    json parameters;  // canonical (nlohmann objects serialize with sorted keys)
    std::vector<Hit> hits;
    unsigned long scanned_count = 0;
    bool partial = false;
    long cursor = 0;  // grid cursor reached; input for resumption
};

inline Integer height_key(const Rational& q) {
    Integer n = abs(num(q)), d = den(q);
    return n > d ? n : d;
}

inline void sort_hits(std::vector<Hit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        Integer ka = height_key(a.alpha), kb = height_key(b.alpha);
        if (ka != kb) return ka < kb;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.m != b.m) return a.m < b.m;
        return a.n < b.n;
    });
}

inline json relation_to_json(const Relation& r) {
    json j;
    j["exponents"] = r.exponents;
    j["witness_order"] = r.witness_order;
    return j;
}

inline json verdict_to_json(const IndependenceVerdict& v) {
    json j;
    j["dependent"] = v.dependent;
    j["method"] = v.method == DecisionMethod::complete_lattice ? "complete-lattice" : "bounded-search";
    if (v.bound) j["bound"] = *v.bound;
    if (v.relation) {
        j["exponents"] = v.relation->exponents;
        j["witness_order"] = v.relation->witness_order;
    }
    if (v.constant) j["constant"] = to_string(*v.constant);
    j["lattice_rank"] = v.lattice_rank;
    return j;
}

inline json hit_to_json(const Hit& h) {
    json j;
    j["alpha"] = to_string(h.alpha);
    j["m"] = h.m;
    j["n"] = h.n;
    j["exponents"] = h.relation.exponents;
    j["witness_order"] = h.relation.witness_order;
    return j;
}

inline void emit_jsonl(const SearchReport& r, std::ostream& os) {
    for (const Hit& h : r.hits) os << hit_to_json(h).dump() << "\n";
    json footer;
    footer["type"] = "summary";
    footer["parameters"] = r.parameters;
    footer["scanned_count"] = r.scanned_count;
    footer["hit_count"] = r.hits.size();
    footer["partial"] = r.partial;
    footer["cursor"] = r.cursor;
    os << footer.dump() << "\n";
}

// Fixed columns: alpha, m, n, exponents (space-separated), witness_order.
inline void emit_csv(const SearchReport& r, std::ostream& os) {
    os << "alpha,m,n,exponents,witness_order\n";
    for (const Hit& h : r.hits) {
        os << to_string(h.alpha) << "," << h.m << "," << h.n << ",";
        for (std::size_t i = 0; i < h.relation.exponents.size(); ++i) {
            if (i) os << " ";
            os << h.relation.exponents[i];
        }
        os << "," << h.relation.witness_order << "\n";
    }
}

inline void emit_report(const SearchReport& r, const std::string& path, const std::string& format) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw input_error("cannot open output file: " + path);
    if (format == "jsonl")
        emit_jsonl(r, os);
    else if (format == "csv")
        emit_csv(r, os);
    else
        throw input_error("unknown report format: " + format);
    if (!os.good()) throw input_error("I/O failure writing " + path);
}

// FNV-1a over the canonical parameter serialization; stable under key
// reordering because nlohmann objects are sorted maps.
inline std::string params_hash(const json& parameters) {
    std::string s = parameters.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Checkpoint {
    long grid_cursor = 0;
    std::string hash;
};

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
    json j;
    j["grid_cursor"] = c.grid_cursor;
    j["params_hash"] = c.hash;
    std::ofstream os(path, std::ios::trunc);
    os << j.dump() << "\n";
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream is(path);
    if (!is) return std::nullopt;
    json j;
    is >> j;
    Checkpoint c;
    c.grid_cursor = j.at("grid_cursor").get<long>();
    c.hash = j.at("params_hash").get<std::string>();
    return c;
}

}  // namespace multdep
