#pragma once

#include <json.hpp>

#include <string>

#include "bo/qseries.hpp"
#include "bo/symfunc.hpp"

namespace bo {

// {"den": 8, "order8": N, "terms": [[exp8, "num/den"], ...]}, terms ascending.
nlohmann::ordered_json series_json(const QSeries& qs);

// "exp8,exp,coeff" rows, ascending exponent.
std::string series_csv(const QSeries& qs);

// {"level": l, "coeffs": [{"mu": [...], "series": {...}}, ...]}, keys ascending.
nlohmann::ordered_json sympoly_json(const SymLaurentPoly& p);

}  // namespace bo
