#pragma once

#include <string>

#include <json.hpp>

#include "cycdes/qsym.hpp"
#include "cycdes/straighten.hpp"
#include "cycdes/tableau.hpp"
#include "cycdes/verify.hpp"

namespace cycdes {

using nlohmann::json;

// Coefficients serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json shape_to_json(const Shape& s);     // {lambda, mu?, boxed}
Shape shape_from_json(const json& j);

json tableau_to_json(const Tableau& t);  // {shape, rows}
Tableau tableau_from_json(const json& j);

json multiset_to_json(const PermMultiset& b);  // [{perm, mult}]
PermMultiset multiset_from_json(const json& j);

json qsymf_to_json(const QSymF& q);            // {basis:"F", n, terms}
json mexpansion_to_json(const MExpansion& m);  // {basis:"M", n, terms}
json schur_to_json(const SchurExpansion& e);   // {basis:"s", n, terms}

json trace_to_json(const StraighteningTrace& tr);

json report_to_json(const VerifyReport& r);  // {suite, statement, checks}

json extension_report_to_json(const ExtensionReport& r);

}  // namespace cycdes
