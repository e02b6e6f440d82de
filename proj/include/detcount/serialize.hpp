#pragma once

#include <string>

#include "json.hpp"

#include "detcount/counting.hpp"
#include "detcount/oracle.hpp"

namespace detcount {

// Counts are serialized as decimal strings throughout.

// {"ring", "n", "rows": [{"s", "class_size", "count_per_element", "class_total"}], "grand_total"}.
// "s" is an integer for chain rings and an array for product rings.
nlohmann::ordered_json to_json(const ClassTable& table);
ClassTable class_table_from_json(const nlohmann::json& j);

// Header s,class_size,count_per_element,class_total,grand_total; product
// valuations are written as s_1|s_2|...
std::string to_csv(const ClassTable& table);
std::string to_text(const ClassTable& table);

// Wall time is omitted unless requested, so serialized reports are
// reproducible byte for byte.
nlohmann::ordered_json to_json(const VerifyReport& report, bool include_timing = false);
std::string to_text(const VerifyReport& report);

// counts maps each element literal to its count, in element order.
template <class Ring>
nlohmann::ordered_json to_json(const Ring& ring, const Tally& tally) {
    nlohmann::ordered_json j;
    j["ring"] = tally.ring;
    j["n"] = tally.n;
    j["mode"] = to_string(tally.mode);
    if (tally.mode == TallyMode::Sampled) {
        j["samples"] = std::to_string(tally.samples);
        j["seed"] = std::to_string(tally.seed);
    }
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::uint64_t i = 0; i < tally.counts.size(); ++i) {
        counts[ring.format(ring.element_at(i))] = std::to_string(tally.counts[i]);
    }
    j["counts"] = std::move(counts);
    j["total"] = std::to_string(tally.total());
    return j;
}

}  // namespace detcount
