#include "bo/json_io.hpp"

#include <numeric>
#include <sstream>

namespace bo {

nlohmann::ordered_json series_json(const QSeries& qs) {
    nlohmann::ordered_json j;
    j["den"] = 8;
    j["order8"] = qs.order8();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : qs.terms()) terms.push_back({e, to_string(c)});
    j["terms"] = std::move(terms);
    return j;
}

std::string series_csv(const QSeries& qs) {
    std::ostringstream out;
    out << "exp8,exp,coeff\n";
    for (const auto& [e, c] : qs.terms()) {
        const int g = std::gcd(e < 0 ? -e : e, 8);
        out << e << ",";
        if (e == 0) {
            out << 0;
        } else if (8 / g == 1) {
            out << e / g;
        } else {
            out << e / g << "/" << 8 / g;
        }
        out << "," << to_string(c) << "\n";
    }
    return out.str();
}

nlohmann::ordered_json sympoly_json(const SymLaurentPoly& p) {
    nlohmann::ordered_json j;
    j["level"] = p.level;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& [mu, series] : p.coeffs) {
        nlohmann::ordered_json entry;
        entry["mu"] = mu.entries();
        entry["series"] = series_json(series);
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

}  // namespace bo
