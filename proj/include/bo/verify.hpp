#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bo/fock.hpp"
#include "bo/formulas.hpp"

namespace bo {

// Outcome of one identity check: both sides computed independently and
// compared coefficient-exactly below the truncation.
struct VerifyReport {
    std::string id;
    std::string params;
    int order8 = 0;
    bool equal = false;
    std::optional<int> first_diff_exp8;
    std::string lhs_digest;
    std::string rhs_digest;
};

struct VerifyOptions {
    std::optional<int> level;
    std::optional<GenPartition> lambda;
    std::vector<TPoint> pts;
    std::optional<int> order_q;  // truncation in q units; identities are checked through q^order
    std::optional<int> charge;   // for ok-shift
};

// Known identity ids: jacobi, cor33, lemma35, cor36, cor37, cor42, cor43,
// ok-shift. Throws std::invalid_argument for anything else.
VerifyReport verify(const std::string& id, const VerifyOptions& opts = {});

const std::vector<std::string>& verify_ids();

// The full default battery: every identity over its standard parameter sweep
// at its standard order (overridable). Sweeps over lambda ranges are
// aggregated into a single report per (id, level).
std::vector<VerifyReport> verify_battery(std::optional<int> order_q = {});

std::string to_string(const VerifyReport& r);

}  // namespace bo
