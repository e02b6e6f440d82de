#include "detcount/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "detcount/error.hpp"

namespace detcount {
namespace {

std::string valuation_label(const std::vector<unsigned>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

nlohmann::ordered_json valuation_json(const std::vector<unsigned>& v) {
    if (v.size() == 1) return v.front();
    return v;
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const ClassTable& table) {
    nlohmann::ordered_json j;
    j["ring"] = table.ring;
    j["n"] = table.n;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r["s"] = valuation_json(row.valuation);
        r["class_size"] = row.class_size.str();
        r["count_per_element"] = row.count_per_element.str();
        r["class_total"] = row.class_total.str();
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["grand_total"] = table.grand_total.str();
    return j;
}

ClassTable class_table_from_json(const nlohmann::json& j) {
    try {
        ClassTable table;
        table.ring = j.at("ring").get<std::string>();
        table.n = j.at("n").get<unsigned>();
        for (const auto& r : j.at("rows")) {
            ClassRow row;
            const auto& s = r.at("s");
            if (s.is_array()) {
                row.valuation = s.get<std::vector<unsigned>>();
            } else {
                row.valuation = {s.get<unsigned>()};
            }
            row.class_size = Count(r.at("class_size").get<std::string>());
            row.count_per_element = Count(r.at("count_per_element").get<std::string>());
            row.class_total = Count(r.at("class_total").get<std::string>());
            table.rows.push_back(std::move(row));
        }
        table.grand_total = Count(j.at("grand_total").get<std::string>());
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed class table JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("malformed count in class table JSON: ") + e.what());
    }
}

std::string to_csv(const ClassTable& table) {
    std::ostringstream out;
    out << "s,class_size,count_per_element,class_total,grand_total\n";
    for (const auto& row : table.rows) {
        out << valuation_label(row.valuation, "|") << ',' << row.class_size << ',' << row.count_per_element << ','
            << row.class_total << ',' << table.grand_total << '\n';
    }
    return out.str();
}

std::string to_text(const ClassTable& table) {
    std::ostringstream out;
    out << "ring " << table.ring << " n " << table.n << '\n';
    out << "s class_size count_per_element class_total\n";
    for (const auto& row : table.rows) {
        out << valuation_label(row.valuation, "|") << ' ' << row.class_size << ' ' << row.count_per_element << ' '
            << row.class_total << '\n';
    }
    out << "grand_total " << table.grand_total << '\n';
    return out.str();
}

nlohmann::ordered_json to_json(const VerifyReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["ring"] = report.ring;
    j["n"] = report.n;
    j["mode"] = to_string(report.mode);
    if (report.mode == TallyMode::Sampled) {
        j["samples"] = std::to_string(report.samples);
        j["seed"] = std::to_string(report.seed);
    }
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : report.classes) {
        nlohmann::ordered_json r;
        r["s"] = valuation_json(c.valuation);
        r["class_size"] = c.class_size.str();
        r["expected_per_element"] = c.expected_per_element.str();
        if (report.mode == TallyMode::Exhaustive) {
            r["expected_total"] = c.expected_total.str();
            r["observed_total"] = std::to_string(c.observed_total);
            r["delta"] = (Count(c.observed_total) - c.expected_total).str();
            r["per_element_exact"] = c.per_element_exact;
        } else {
            r["probability"] = c.probability;
            r["expected_frequency"] = c.expected_frequency;
            r["observed_total"] = std::to_string(c.observed_total);
            r["delta"] = static_cast<double>(c.observed_total) - c.expected_frequency;
            r["sigma"] = c.sigma;
            r["z"] = c.z;
        }
        r["pass"] = c.pass;
        classes.push_back(std::move(r));
    }
    j["classes"] = std::move(classes);
    j["note"] = report.note;
    if (include_timing) j["wall_seconds"] = report.wall_seconds;
    j["verdict"] = report.pass ? "pass" : "fail";
    return j;
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "ring " << report.ring << " n " << report.n << " mode " << to_string(report.mode);
    if (report.mode == TallyMode::Sampled) out << " samples " << report.samples << " seed " << report.seed;
    out << '\n';
    for (const auto& c : report.classes) {
        out << "s=" << valuation_label(c.valuation, "|") << " size " << c.class_size << " per_element "
            << c.expected_per_element;
        if (report.mode == TallyMode::Exhaustive) {
            out << " expected " << c.expected_total << " observed " << c.observed_total;
        } else {
            out << " expected " << fixed(c.expected_frequency, 2) << " observed " << c.observed_total << " z "
                << fixed(c.z, 3);
        }
        out << (c.pass ? " PASS" : " FAIL") << '\n';
    }
    out << "note: " << report.note << '\n';
    out << "verdict: " << (report.pass ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace detcount
