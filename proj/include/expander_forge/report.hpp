#pragma once

// JSON views of library results. Keys keep a fixed order so output is
// byte-stable.

#include <nlohmann/json.hpp>

#include <string>

#include "expander_forge/bounds.hpp"
#include "expander_forge/cheeger.hpp"
#include "expander_forge/construct.hpp"
#include "expander_forge/spectra.hpp"

namespace expander_forge {

using Json = nlohmann::ordered_json;

/// %.17g, the CSV number format.
std::string format_double(double x);

Json to_json(const SpectralReport& r);
Json to_json(const CheegerCertificate& c);
Json to_json(const TreeSplit& s);
Json to_json(const BalancedSubset& h);
Json to_json(const TestFunction& f);
Json to_json(const MuPairTerm& t);
Json to_json(const AuditReport& a);

const char* to_string(SubsetClass cls);

}  // namespace expander_forge
