// JSON (de)serialization of BlockVector files.
//
// Format:
//   {
//     "n": 2,
//     "order": "descending",        // blocks are (x_{n-1}, ..., x_0)
//     "blocks": [ {"k": 0, "block": [[re, im], ...]}, ... ]
//   }
// Coordinates ascending; every block has exactly n entries.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include <twistlab/block_vector.hpp>

namespace twistlab {

inline nlohmann::json to_json(const BlockVector& v) {
    nlohmann::json j;
    j["n"] = v.block_size();
    j["order"] = "descending";
    j["blocks"] = nlohmann::json::array();
    for (const auto& e : v.entries()) {
        nlohmann::json blk = nlohmann::json::array();
        for (const complex& c : e.block)
            blk.push_back({c.real(), c.imag()});
        j["blocks"].push_back({{"k", e.k}, {"block", blk}});
    }
    return j;
}

inline BlockVector block_vector_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("block vector: missing 'n' or 'blocks'");
    if (j.value("order", "descending") != std::string("descending"))
        throw std::invalid_argument("block vector: unsupported component order");
    BlockVector v(j.at("n").get<std::size_t>());
    for (const auto& entry : j.at("blocks")) {
        const auto& blk = entry.at("block");
        if (blk.size() != v.block_size())
            throw std::invalid_argument("block vector: block length != n");
        std::vector<complex> b;
        b.reserve(blk.size());
        for (const auto& pair : blk) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("block vector: entry is not [re, im]");
            b.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        v.set(entry.at("k").get<std::size_t>(), std::move(b));
    }
    return v;
}

} // namespace twistlab
