#pragma once

#include <string>

#include <json.hpp>

#include "modforms/bounds.hpp"
#include "modforms/extremal.hpp"
#include "modforms/forms.hpp"
#include "modforms/hecke.hpp"
#include "modforms/qlaurent.hpp"

namespace mf {

using json = nlohmann::ordered_json;

/// {"valuation": v, "prec": p, "coeffs": ["a/b", ...]}; coefficients run
/// from the valuation to prec - 1 so the round trip is exact.
json to_json(const QLaurent& f);
QLaurent qlaurent_from_json(const json& j);

/// Full-precision decimal string.
json to_json(const ApproxReal& x);

json to_json(const WeightProfile& p);
/// Header {"k", "ell", "prec"} plus "rows".
json to_json(const MillerBasis& b);
MillerBasis miller_basis_from_json(const json& j);

json to_json(const KernelCheckReport& r);
json to_json(const Eigenform& g);
json to_json(const EigenDecomposition& d);
json to_json(const DeligneReport& r);
json to_json(const MultiplicativityReport& r);
json to_json(const BoundReport& r);
json to_json(const KernelConstantsReport& r);
json to_json(const GridCertificate& c);
json to_json(const Theorem2Threshold& t);
json to_json(const BurmannCoefficient& b);

json to_json(const ScanRecord& r);
/// Throws CorruptCheckpoint when a field is missing or has the wrong type.
ScanRecord scan_record_from_json(const json& j);

}  // namespace mf
