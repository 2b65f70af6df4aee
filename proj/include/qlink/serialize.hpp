#pragma once

#include <nlohmann/json.hpp>

#include "qlink/braid.hpp"
#include "qlink/laurent.hpp"
#include "qlink/operator.hpp"
#include "qlink/report.hpp"

namespace qlink::io {

using nlohmann::json;

// [[exp, re_num, re_den, im_num, im_den], ...] ascending in exp. Integers
// outside the int64 range are written as decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// {"shape_in": [twice spins], "shape_out": [...], "entries": [[row, col, poly], ...]}
json operator_to_json(const Operator& op);
Operator operator_from_json(const json& j);

// {"n_strands": n, "letters": [...], "colors": [twice spins]}
json braid_to_json(const braid::ColoredBraid& b);
braid::ColoredBraid braid_from_json(const json& j);

// {"title", "pass", "checks": [{"name", "pass", "residual_nnz"[, "detail"]}]}
json report_to_json(const Report& r);

}  // namespace qlink::io
