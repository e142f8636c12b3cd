#include "lgcpalm/summary.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace lgcp {

std::string to_string(SummaryKind kind) {
    switch (kind) {
    case SummaryKind::F: return "F";
    case SummaryKind::G: return "G";
    case SummaryKind::J: return "J";
    case SummaryKind::K: return "K";
    }
    throw std::logic_error("unknown summary kind");
}

std::string to_string(SummaryMethod method) {
    switch (method) {
    case SummaryMethod::Laplace: return "Laplace";
    case SummaryMethod::MonteCarlo: return "MonteCarlo";
    case SummaryMethod::Empirical: return "Empirical";
    case SummaryMethod::Theoretical: return "Theoretical";
    }
    throw std::logic_error("unknown summary method");
}

void SummaryCurve::push(double r, double value) {
    radii.push_back(r);
    values.push_back(value);
    ok.push_back(1);
    notes.emplace_back();
}

void SummaryCurve::push_missing(double r, std::string note) {
    radii.push_back(r);
    values.push_back(std::numeric_limits<double>::quiet_NaN());
    ok.push_back(0);
    notes.push_back(std::move(note));
}

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string SummaryCurve::to_csv() const {
    std::string out;
    if (!provenance.empty()) {
        out += "# config: ";
        out += provenance;
        out += "\n";
    }
    out += "r,value,method,q\n";
    const std::string method_name = to_string(method);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        out += format_number(radii[i]);
        out += ",";
        out += ok[i] ? format_number(values[i]) : "nan";
        out += ",";
        out += method_name;
        out += ",";
        out += std::to_string(q);
        out += "\n";
    }
    return out;
}

std::string SummaryCurve::to_json() const {
    nlohmann::json doc;
    doc["kind"] = to_string(kind);
    doc["method"] = to_string(method);
    doc["q"] = q;
    if (!provenance.empty()) {
        nlohmann::json prov = nlohmann::json::parse(provenance, nullptr, false);
        doc["config"] = prov.is_discarded() ? nlohmann::json(provenance) : prov;
    }
    doc["radii"] = radii;
    nlohmann::json vals = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (ok[i])
            vals.push_back(values[i]);
        else
            vals.push_back(nullptr);
    }
    doc["values"] = vals;
    nlohmann::json note_list = nlohmann::json::array();
    for (const auto& n : notes) note_list.push_back(n);
    doc["notes"] = note_list;
    return doc.dump(2);
}

std::vector<double> radii_grid(double min, double max, int count) {
    if (count < 1)
        throw std::invalid_argument("radii_grid: count must be >= 1");
    if (!(min > 0.0) || !(max >= min))
        throw std::invalid_argument("radii_grid: need 0 < min <= max");
    std::vector<double> radii(count);
    if (count == 1) {
        radii[0] = min;
        return radii;
    }
    const double step = (max - min) / (count - 1);
    for (int i = 0; i < count; ++i) radii[i] = min + i * step;
    radii.back() = max;
    return radii;
}

} // namespace lgcp
