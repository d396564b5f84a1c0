#include "tameblocks/group_spec.hpp"

#include "tameblocks/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tameblocks {

using nlohmann::json;

std::uint64_t fnv1a_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

GroupSpec parse_group_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("spec is not valid JSON: ") + e.what());
    }
    auto require = [&](const char* key) {
        if (!doc.contains(key))
            throw validation_error(std::string("spec is missing field '") + key + "'");
        return doc.at(key);
    };

    GroupSpec spec;
    spec.source_hash = fnv1a_hash(text);
    try {
        spec.name = require("name").get<std::string>();
        RootDatum raw;
        raw.rank = require("rank").get<int>();
        raw.name = spec.name;
        for (const auto& row : require("roots"))
            raw.roots.push_back(row.get<std::vector<long long>>());
        for (const auto& row : require("coroots"))
            raw.coroots.push_back(row.get<std::vector<long long>>());
        raw.simple = require("simple").get<std::vector<int>>();
        spec.rd = validate_root_datum(std::move(raw));

        IntMat theta(spec.rd.rank);
        auto rows = require("theta");
        if (rows.size() != static_cast<size_t>(spec.rd.rank))
            throw validation_error("theta must be a rank x rank matrix");
        for (int i = 0; i < spec.rd.rank; ++i) {
            auto row = rows.at(static_cast<size_t>(i)).get<std::vector<long long>>();
            if (row.size() != static_cast<size_t>(spec.rd.rank))
                throw validation_error("theta must be a rank x rank matrix");
            for (int j = 0; j < spec.rd.rank; ++j)
                theta.at(i, j) = row[static_cast<size_t>(j)];
        }
        spec.frob.theta = based_automorphism(spec.rd, std::move(theta));
        spec.frob.q = require("q").get<long long>();
        spec.frob.p = require("p").get<long long>();
        if (doc.contains("ell") && !doc.at("ell").is_null())
            spec.frob.ell = doc.at("ell").get<long long>();
        std::string lambda = require("lambda").get<std::string>();
        if (lambda == "Qlbar")
            spec.frob.lambda = Lambda::Qlbar;
        else if (lambda == "Zlbar")
            spec.frob.lambda = Lambda::Zlbar;
        else
            throw validation_error("lambda must be \"Qlbar\" or \"Zlbar\"");
        if (doc.contains("diagram_rotation") && !doc.at("diagram_rotation").is_null())
            spec.frob.diagram_rotation =
                doc.at("diagram_rotation").get<std::vector<long long>>();
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed spec field: ") + e.what());
    }
    validate_frobenius(spec.frob);
    return spec;
}

GroupSpec load_group_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str());
}

std::string serialize_group_spec(const GroupSpec& spec) {
    json doc;
    doc["name"] = spec.name;
    doc["rank"] = spec.rd.rank;
    doc["roots"] = spec.rd.roots;
    doc["coroots"] = spec.rd.coroots;
    doc["simple"] = spec.rd.simple;
    std::vector<std::vector<long long>> theta;
    for (int i = 0; i < spec.rd.rank; ++i) {
        std::vector<long long> row;
        for (int j = 0; j < spec.rd.rank; ++j)
            row.push_back(spec.frob.theta.matrix.at(i, j));
        theta.push_back(std::move(row));
    }
    doc["theta"] = theta;
    doc["q"] = spec.frob.q;
    doc["p"] = spec.frob.p;
    if (spec.frob.ell)
        doc["ell"] = *spec.frob.ell;
    doc["lambda"] = spec.frob.lambda == Lambda::Qlbar ? "Qlbar" : "Zlbar";
    if (spec.frob.diagram_rotation)
        doc["diagram_rotation"] = *spec.frob.diagram_rotation;
    return doc.dump(2) + "\n";
}

} // namespace tameblocks
